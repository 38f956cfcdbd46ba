#include "ffd/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <regex>
#include <sstream>

#include "ffd/error.hpp"
#include "ffd/kernels.hpp"
#include "ffd/rng.hpp"

namespace ffd {

namespace {

constexpr double kAngleTol = 1e-12;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw ParseError("");
    return v;
  } catch (...) {
    throw ParseError("bad number '" + s + "'");
  }
}

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("");
    return v;
  } catch (...) {
    throw ParseError("bad integer '" + s + "'");
  }
}

std::vector<int> layer(int first, int step, int m) {
  std::vector<int> out;
  for (int j = first; j <= m; j += step) out.push_back(j);
  return out;
}

// Product-notation word of the base pattern.
std::vector<int> pattern_word(const std::string& base, int m) {
  std::vector<int> w;
  auto add = [&w](const std::vector<int>& l) { w.insert(w.end(), l.begin(), l.end()); };
  if (base == "full_product") {
    for (int j = m; j >= 1; --j) w.push_back(j);
  } else if (base == "staircase") {
    for (int j = 1; j <= m; ++j) w.push_back(j);
  } else if (base == "ising_brickwork") {
    std::vector<int> odd = layer(1, 2, m), even = layer(2, 2, m);
    std::reverse(odd.begin(), odd.end());
    std::reverse(even.begin(), even.end());
    add(odd);
    add(even);
  } else if (base == "g1") {
    if (m % 2) throw ConstructionError("pattern g1 needs even m, got " + std::to_string(m));
    add(layer(1, 2, m));
    add(layer(2, 2, m));
  } else if (base == "g2") {
    if (m % 3) throw ConstructionError("pattern g2 needs m divisible by 3, got " + std::to_string(m));
    for (int s = 1; s <= 3; ++s) add(layer(s, 3, m));
  } else if (base == "g3") {
    if (m % 4) throw ConstructionError("pattern g3 needs m divisible by 4, got " + std::to_string(m));
    for (int s = 1; s <= 4; ++s) add(layer(s, 4, m));
  } else {
    throw ConstructionError("unknown geometry pattern '" + base + "'");
  }
  return w;
}

}  // namespace

double wrap_angle(double a) {
  const double two_pi = 2 * std::numbers::pi;
  double r = std::fmod(a, two_pi);
  if (r <= -std::numbers::pi) r += two_pi;
  if (r > std::numbers::pi) r -= two_pi;
  return r;
}

AngleSource AngleSource::parse(const std::string& text) {
  std::string t = trim(text);
  if (t == "sin") return sin_rule();
  if (t.rfind("random", 0) == 0) {
    auto colon = t.find(':');
    std::uint64_t seed = colon == std::string::npos ? 0 : std::stoull(t.substr(colon + 1));
    return random(seed);
  }
  std::vector<double> v;
  std::stringstream in(t);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) v.push_back(parse_double(item));
  }
  if (v.empty()) throw ParseError("empty angle list");
  return explicit_list(std::move(v));
}

std::vector<double> AngleSource::angles(int m) const {
  std::vector<double> out;
  switch (kind) {
    case Kind::Sin:
      for (int k = 1; k <= m; ++k) out.push_back(std::sin(static_cast<double>(k)));
      break;
    case Kind::Explicit:
      if (static_cast<int>(values.size()) < m)
        throw ValidationError("angle list has " + std::to_string(values.size()) + " entries, need " +
                              std::to_string(m));
      out.assign(values.begin(), values.begin() + m);
      break;
    case Kind::Random: {
      Rng rng(seed);
      for (int k = 1; k <= m; ++k) out.push_back(rng.uniform(-std::numbers::pi, std::numbers::pi));
      break;
    }
  }
  return out;
}

std::string AngleSource::describe() const {
  switch (kind) {
    case Kind::Sin: return "sin";
    case Kind::Random: return "random:" + std::to_string(seed);
    case Kind::Explicit: {
      std::ostringstream o;
      o.precision(17);
      for (std::size_t i = 0; i < values.size(); ++i) o << (i ? "," : "") << values[i];
      return o.str();
    }
  }
  return "?";
}

CircuitGeometry::CircuitGeometry(std::vector<Gate> gates, std::string label, bool constrained)
    : label_(std::move(label)), constrained_(constrained) {
  for (const Gate& g : gates) append(g);
}

int CircuitGeometry::max_index() const {
  int m = 0;
  for (const Gate& g : gates_) m = std::max(m, g.index);
  return m;
}

void CircuitGeometry::check_angle(const Gate& g) const {
  if (!constrained_) return;
  for (const Gate& h : gates_) {
    if (h.index == g.index && std::abs(wrap_angle(h.angle - g.angle)) > kAngleTol)
      throw ValidationError("generator " + std::to_string(g.index) + " used with two different angles");
  }
}

void CircuitGeometry::append(Gate g) {
  if (g.index < 1) throw IndexError("gate index must be positive");
  g.angle = wrap_angle(g.angle);
  check_angle(g);
  gates_.push_back(g);
}

CircuitGeometry CircuitGeometry::ggt() const {
  std::vector<Gate> out = gates_;
  out.insert(out.end(), gates_.rbegin(), gates_.rend());
  return CircuitGeometry(out, label_.empty() ? label_ : label_ + "_ggt", constrained_);
}

std::string CircuitGeometry::to_string() const {
  std::ostringstream o;
  o.precision(17);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it)
    o << (it == gates_.rbegin() ? "" : " ") << "u" << it->index << ":" << it->angle;
  return o.str();
}

CircuitGeometry from_product_word(const std::vector<int>& word, const std::vector<double>& angles,
                                  std::string label, bool constrained) {
  std::vector<Gate> gates;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 1 || *it > static_cast<int>(angles.size()))
      throw IndexError("generator index " + std::to_string(*it) + " has no angle");
    gates.push_back({*it, angles[static_cast<std::size_t>(*it - 1)]});
  }
  return CircuitGeometry(gates, std::move(label), constrained);
}

CircuitGeometry named_geometry(const std::string& name, int m, const AngleSource& angles) {
  if (m < 1) throw ConstructionError("pattern size must be positive");
  std::string base = name;
  bool ggt = false;
  if (name.size() > 4 && name.compare(name.size() - 4, 4, "_ggt") == 0) {
    base = name.substr(0, name.size() - 4);
    ggt = true;
  }
  std::vector<int> word = pattern_word(base, m);
  if (ggt) {
    std::vector<int> rev(word.rbegin(), word.rend());
    word.insert(word.end(), rev.begin(), rev.end());
  }
  return from_product_word(word, angles.angles(m), name);
}

CircuitGeometry parse_geometry(const std::string& text, int m, const AngleSource& angles) {
  std::string t = trim(text);
  if (t.empty()) return CircuitGeometry({}, "identity");

  static const std::regex call(R"(^([A-Za-z0-9_]+)\s*\((.*)\)$)");
  std::smatch match;
  if (std::regex_match(t, match, call)) {
    int mm = m;
    AngleSource src = angles;
    // Explicit angle lists contain commas, so values run up to the next "key=".
    std::string rest = match[2].str();
    static const std::regex key(R"((\w+)\s*=\s*)");
    struct Key {
      std::string name;
      std::size_t begin;
      std::size_t value;
    };
    std::vector<Key> keys;
    for (auto it = std::sregex_iterator(rest.begin(), rest.end(), key); it != std::sregex_iterator(); ++it)
      keys.push_back({(*it)[1].str(), static_cast<std::size_t>(it->position()),
                      static_cast<std::size_t>(it->position() + it->length())});
    for (std::size_t i = 0; i < keys.size(); ++i) {
      std::size_t end = i + 1 < keys.size() ? keys[i + 1].begin : rest.size();
      std::string value = trim(rest.substr(keys[i].value, end - keys[i].value));
      while (!value.empty() && value.back() == ',') value = trim(value.substr(0, value.size() - 1));
      if (keys[i].name == "m") mm = parse_int(value);
      else if (keys[i].name == "angles") src = AngleSource::parse(value);
      else throw ParseError("unknown pattern argument '" + keys[i].name + "'");
    }
    return named_geometry(match[1].str(), mm, src);
  }

  std::istringstream in(t);
  std::string tok;
  std::vector<std::pair<int, std::optional<double>>> word;
  std::vector<std::string> toks;
  while (in >> tok) toks.push_back(tok);
  if (toks.size() == 1 && toks[0][0] != 'u') return named_geometry(toks[0], m, angles);

  for (const std::string& s : toks) {
    if (s == "|") continue;
    if (s == "ggt") {
      auto rev = word;
      word.insert(word.end(), rev.rbegin(), rev.rend());
      continue;
    }
    if (s.size() < 2 || s[0] != 'u') throw ParseError("bad geometry token '" + s + "'");
    auto colon = s.find(':');
    int j = parse_int(s.substr(1, colon == std::string::npos ? std::string::npos : colon - 1));
    if (j < 1) throw ParseError("generator index must be positive in '" + s + "'");
    std::optional<double> a;
    if (colon != std::string::npos) a = parse_double(s.substr(colon + 1));
    word.emplace_back(j, a);
  }
  int top = m;
  for (const auto& w : word) top = std::max(top, w.first);
  std::vector<double> defaults;
  bool need_defaults = std::any_of(word.begin(), word.end(), [](const auto& w) { return !w.second; });
  if (need_defaults) defaults = angles.angles(top);
  std::vector<Gate> gates;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    gates.push_back({it->first, it->second ? *it->second : defaults[static_cast<std::size_t>(it->first - 1)]});
  return CircuitGeometry(gates, t);
}

Matrix gate_unitary(const Representation& rep, int j, double angle) {
  Matrix u = identity(rep.n_sites);
  apply_left(u, rep.h(j), std::cos(angle), cplx(0, std::sin(angle)));
  return u;
}

Matrix assemble(const Representation& rep, const CircuitGeometry& geo) {
  Matrix u = identity(rep.n_sites);
  for (const Gate& g : geo.gates()) apply_left(u, rep.h(g.index), std::cos(g.angle), cplx(0, std::sin(g.angle)));
  return u;
}

CircuitGeometry simplify(const CircuitGeometry& geo, const Representation& rep) {
  for (const Gate& g : geo.gates()) rep.h(g.index);
  std::vector<Gate> w = geo.gates();
  auto comm = [&rep](int a, int b) { return a == b || commutes(rep.h(a), rep.h(b)); };
  bool shifted = geo.cyclically_shifted();

  auto local_pass = [&]() {
    bool changed = false;
    for (std::size_t i = 0; i + 1 < w.size();) {
      if (w[i].index == w[i + 1].index) {
        w[i].angle = wrap_angle(w[i].angle + w[i + 1].angle);
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        changed = true;
        continue;
      }
      if (w[i].index > w[i + 1].index && comm(w[i].index, w[i + 1].index)) {
        std::swap(w[i], w[i + 1]);
        changed = true;
      }
      ++i;
    }
    auto zero = std::remove_if(w.begin(), w.end(), [](const Gate& g) { return std::abs(g.angle) < kAngleTol; });
    if (zero != w.end()) {
      w.erase(zero, w.end());
      changed = true;
    }
    return changed;
  };

  // Moving the last gate to the front is a similarity transform; it is only
  // done when it lets the gate merge with an equal one.
  auto cyclic_pass = [&]() {
    if (w.size() < 2) return false;
    const Gate last = w.back();
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p].index == last.index) {
        w[p].angle = wrap_angle(w[p].angle + last.angle);
        w.pop_back();
        return true;
      }
      if (!comm(w[p].index, last.index)) break;
    }
    return false;
  };

  for (;;) {
    while (local_pass()) {
    }
    if (!cyclic_pass()) break;
    shifted = true;
  }
  while (local_pass()) {
  }
  CircuitGeometry out(w, geo.label(), false);
  out.set_cyclically_shifted(shifted);
  return out;
}

}  // namespace ffd
