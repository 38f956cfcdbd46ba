#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffd/algebras.hpp"

namespace ffd {

/// Reduces an angle to (-pi, pi].
double wrap_angle(double a);

struct Gate {
  int index;
  double angle;
};

/// Where gate angles come from when a geometry names only generator indices.
struct AngleSource {
  enum class Kind { Sin, Explicit, Random };
  Kind kind = Kind::Sin;
  std::vector<double> values;  // Explicit: angle of generator j at values[j-1]
  std::uint64_t seed = 0;

  static AngleSource sin_rule() { return {}; }
  static AngleSource explicit_list(std::vector<double> v) { return {Kind::Explicit, std::move(v), 0}; }
  static AngleSource random(std::uint64_t seed) { return {Kind::Random, {}, seed}; }
  /// "sin", "random:<seed>" or a comma-separated list.
  static AngleSource parse(const std::string& text);

  /// Angles of generators 1..m.
  std::vector<double> angles(int m) const;
  std::string describe() const;
};

/// Gate word stored in application order: gates()[0] acts first.
class CircuitGeometry {
 public:
  CircuitGeometry() = default;
  explicit CircuitGeometry(std::vector<Gate> gates, std::string label = {}, bool constrained = true);

  const std::vector<Gate>& gates() const { return gates_; }
  const std::string& label() const { return label_; }
  bool constrained() const { return constrained_; }
  bool cyclically_shifted() const { return shifted_; }
  bool empty() const { return gates_.empty(); }
  int max_index() const;

  void set_label(std::string label) { label_ = std::move(label); }
  void set_cyclically_shifted(bool v) { shifted_ = v; }

  /// Appends a gate acting after every existing one.
  void append(Gate g);

  /// This word followed by its reverse, the G.G^T pattern.
  CircuitGeometry ggt() const;

  /// Product notation, leftmost factor acting last: "u4:0.1 u3:0.2 ...".
  std::string to_string() const;

 private:
  void check_angle(const Gate& g) const;

  std::vector<Gate> gates_;
  std::string label_;
  bool constrained_ = true;
  bool shifted_ = false;
};

/// Builds a geometry from a word written in product notation (leftmost acts last).
CircuitGeometry from_product_word(const std::vector<int>& word, const std::vector<double>& angles,
                                  std::string label = {}, bool constrained = true);

/// Named patterns: full_product, staircase_ggt, ising_brickwork, g1, g2, g3 and *_ggt.
CircuitGeometry named_geometry(const std::string& name, int m, const AngleSource& angles);

/// Parses "u1:0.5 u3 | ggt", a bare pattern name, or "g1_ggt(m=12, angles=sin)".
/// Tokens without an explicit angle draw it from `angles`; `m` sizes named patterns.
CircuitGeometry parse_geometry(const std::string& text, int m, const AngleSource& angles);

/// cos(angle) I + i sin(angle) h_j.
Matrix gate_unitary(const Representation& rep, int j, double angle);

/// Product of the gates in application order.
Matrix assemble(const Representation& rep, const CircuitGeometry& geo);

/// Applies merging of repeated gates, commuting swaps into ascending order and
/// cyclic shifts.  Preserves the eigenphase multiset of the assembled circuit.
CircuitGeometry simplify(const CircuitGeometry& geo, const Representation& rep);

}  // namespace ffd
