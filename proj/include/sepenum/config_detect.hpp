#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepenum/graph.hpp"
#include "sepenum/holes.hpp"

namespace sepenum {

enum class ConfigKind { square, theta, pyramid, prism, wheel, even_wheel, turtle, even_hole };

std::string to_string(ConfigKind k);
/// Accepts the names produced by to_string ("even-wheel", ...).
std::optional<ConfigKind> config_kind_from_string(const std::string& s);

/// Named vertex lists. Layout per kind:
///   square, even-hole: hole
///   theta:   P1 P2 P3, each a..b
///   pyramid: P1 P2 P3, each apex..b_i (b_1 b_2 b_3 the triangle)
///   prism:   P1 P2 P3, each a_i..b_i
///   wheel, even-wheel: rim, center
///   turtle:  P1 P2 (both u..v), x, y
struct ConfigurationWitness {
  ConfigKind kind;
  std::vector<std::pair<std::string, std::vector<Vertex>>> parts;

  const std::vector<Vertex>& part(const std::string& name) const;
};

struct DetectResult {
  std::optional<ConfigurationWitness> witness;
  bool complete = true;  // false: hole budget ran out before a witness was found
};

/// Exhaustive search over holes. Deterministic: holes are scanned in
/// canonical order and the first witness is returned.
DetectResult find_config(const Graph& g, ConfigKind kind,
                         std::size_t budget = default_hole_budget());

/// Same, over an already computed hole list.
std::optional<ConfigurationWitness> find_config_in(const Graph& g, ConfigKind kind,
                                                   const std::vector<Hole>& holes);

/// Literal definition check of a witness: the induced subgraph on its
/// vertices has exactly the edges the configuration prescribes.
bool verify_witness(const Graph& g, const ConfigurationWitness& w);

enum class Membership { yes, no, inconclusive };

struct ClassCheck {
  Membership in_class = Membership::yes;
  std::optional<ConfigurationWitness> witness;
};

/// Looks for square, prism, pyramid, theta and even wheel in that order.
ClassCheck is_in_class_C(const Graph& g, std::size_t budget = default_hole_budget());

}  // namespace sepenum
