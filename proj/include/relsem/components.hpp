#pragma once

#include <functional>
#include <memory>
#include <span>

#include "relsem/semantics.hpp"

namespace relsem {

/// Pair of disjoint, sorted name sets: required (called, not provided)
/// and provided (declared) procedures.
struct Interface {
  std::vector<std::string> required;
  std::vector<std::string> provided;

  Interface() = default;
  Interface(std::vector<std::string> req, std::vector<std::string> prov);

  bool requires_name(std::string_view name) const;
  bool provides_name(std::string_view name) const;

  bool operator==(const Interface&) const = default;
};

class Component;
using ComponentPtr = std::shared_ptr<const Component>;

/// A component maps environments over its required names to environments
/// over its provided names. Base components come from procedure
/// declarations; composites pair two components; constant and opaque
/// function components serve as contract witnesses and test doubles.
/// Components are immutable and applied on demand, never tabulated.
class Component {
 public:
  struct Base {
    std::vector<ProcDecl> decls;
    StateSpacePtr space;
  };
  struct Composite {
    ComponentPtr left;
    ComponentPtr right;
  };
  struct Constant {
    ProcEnv output;
  };
  struct Opaque {
    std::function<ProcEnv(const ProcEnv&)> fn;
    std::string label;
  };
  using Kind = std::variant<Base, Composite, Constant, Opaque>;

  Component(Interface iface, Kind kind)
      : iface_(std::move(iface)), kind_(std::move(kind)) {}

  const Interface& iface() const { return iface_; }
  const Kind& kind() const { return kind_; }

 private:
  Interface iface_;
  Kind kind_;
};

/// Abstraction of a declaration set into a component: provided = declared
/// names, required = (called by the bodies, plus extra_required) minus
/// provided. Application is the standard denotation relative to the given
/// required environment.
ComponentPtr base_component(std::vector<ProcDecl> decls, StateSpacePtr space,
                            std::vector<std::string> extra_required = {});

/// Constant map to a fixed provided environment.
ComponentPtr constant_component(Interface iface, ProcEnv output);

/// Arbitrary function component (test doubles, law witnesses). The caller
/// is responsible for monotonicity.
ComponentPtr opaque_component(Interface iface,
                              std::function<ProcEnv(const ProcEnv&)> fn,
                              std::string label);

/// Components are composable iff their provided sets are disjoint.
bool composable(const Component& m1, const Component& m2);

/// Composition with interface (P-1 u P-2) \ (P+1 u P+2) / (P+1 u P+2).
/// Throws ComposabilityError when not composable.
ComponentPtr compose(ComponentPtr m1, ComponentPtr m2);

/// Applies the component to an environment whose scope must equal the
/// component's required set. Composite application solves the inner least
/// fixed point over the joint provided environment.
ProcEnv apply_component(const Component& m, const ProcEnv& rho_minus);

/// Sound refuter / incomplete verifier of monotonicity: true iff the
/// component maps every given ordered pair to an ordered pair.
/// Samples must satisfy first below second and have the required scope.
bool check_monotone(
    const Component& m,
    std::span<const std::pair<ProcEnv, ProcEnv>> ordered_samples);

}  // namespace relsem
