#include "ffd/algebras.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "ffd/error.hpp"
#include "ffd/kernels.hpp"

namespace ffd {

namespace {

PauliString ps(int n, const std::string& text) { return PauliString::parse(text, n); }

// Base block of the shift-by-three sequence, on the first five sites.
const char* kShiftBase[6] = {"X1", "Z1 Z3", "Z1 X2 Y3", "X3", "Z3 Z4", "Z2 Z3 Y4 Z5"};

// Prefix of the minimal 6k sequence; entries beyond 8 repeat entries 3..8 shifted.
PauliString minimal_term(int j, int n_sites) {
  if (j == 1) return ps(n_sites, "Z1");
  if (j == 2) return ps(n_sites, "Y1 Z2");
  return shift6_term(j - 2, n_sites);
}

int max_site_of(const std::vector<PauliString>& ops) {
  int s = 1;
  for (const auto& p : ops) s = std::max(s, p.max_site());
  return s;
}

std::vector<PauliString> rewidth(const std::vector<PauliString>& ops, int n) {
  std::vector<PauliString> out;
  out.reserve(ops.size());
  for (const auto& p : ops) out.push_back(PauliString(n, p.x_mask(), p.z_mask(), p.phase_exp()));
  return out;
}

}  // namespace

std::string to_string(RepKind kind) {
  switch (kind) {
    case RepKind::IsingStandard: return "IsingStandard";
    case RepKind::IsingHomogeneous: return "IsingHomogeneous";
    case RepKind::FFDBasic: return "FFDBasic";
    case RepKind::FFDCut: return "FFDCut";
    case RepKind::FFDShift6: return "FFDShift6";
    case RepKind::FFDMinimal: return "FFDMinimal";
  }
  return "?";
}

RepKind parse_rep_kind(const std::string& name) {
  static const std::map<std::string, RepKind> names = {
      {"IsingStandard", RepKind::IsingStandard}, {"ising", RepKind::IsingStandard},
      {"ising-std", RepKind::IsingStandard},     {"IsingHomogeneous", RepKind::IsingHomogeneous},
      {"ising-hom", RepKind::IsingHomogeneous},  {"FFDBasic", RepKind::FFDBasic},
      {"ffd-basic", RepKind::FFDBasic},          {"FFDCut", RepKind::FFDCut},
      {"ffd-cut", RepKind::FFDCut},              {"FFDShift6", RepKind::FFDShift6},
      {"ffd-shift6", RepKind::FFDShift6},        {"FFDMinimal", RepKind::FFDMinimal},
      {"ffd-min", RepKind::FFDMinimal},          {"ffd-minimal", RepKind::FFDMinimal},
  };
  auto it = names.find(name);
  if (it == names.end()) throw ParseError("unknown representation kind '" + name + "'");
  return it->second;
}

bool is_ffd(RepKind kind) {
  return kind != RepKind::IsingStandard && kind != RepKind::IsingHomogeneous;
}

bool expect_anticommute(RepKind kind, int j, int k) {
  int d = std::abs(j - k);
  if (d == 0) return false;
  return is_ffd(kind) ? d <= 2 : d == 1;
}

const PauliString& Representation::h(int j) const {
  if (j < 1 || j > m) throw IndexError("generator index " + std::to_string(j) + " outside 1.." + std::to_string(m));
  return generators[static_cast<std::size_t>(j - 1)];
}

PauliString shift6_term(int j, int n_sites) {
  if (j < 1) throw IndexError("sequence index must be positive");
  int block = (j - 1) / 6;
  PauliString base = PauliString::parse(kShiftBase[(j - 1) % 6], PauliString::kMaxSites);
  PauliString moved = base.shifted(3 * block, PauliString::kMaxSites);
  if (moved.max_site() > n_sites) return moved.truncated(n_sites);
  return PauliString(n_sites, moved.x_mask(), moved.z_mask(), moved.phase_exp());
}

std::vector<PauliString> ffd_basic_partner(int m) {
  if (m < 1) throw ConstructionError("m must be at least 1");
  std::vector<PauliString> out;
  for (int j = 1; j <= m; ++j)
    out.push_back(ps(m + 2, "Z" + std::to_string(j) + " X" + std::to_string(j + 1) + " X" + std::to_string(j + 2)));
  return out;
}

Representation build_representation(RepKind kind, int m) {
  if (m < 1) throw ConstructionError("m must be at least 1, got " + std::to_string(m));
  Representation rep;
  rep.kind = kind;
  rep.m = m;
  std::vector<PauliString>& g = rep.generators;
  const int W = PauliString::kMaxSites;
  switch (kind) {
    case RepKind::IsingStandard:
      rep.n_sites = m / 2 + 1;
      if (rep.n_sites > W) throw ConstructionError("Ising chain longer than 64 sites");
      for (int j = 1; j <= m; ++j) {
        int k = (j + 1) / 2;
        g.push_back(j % 2 ? ps(rep.n_sites, "Z" + std::to_string(k))
                          : ps(rep.n_sites, "X" + std::to_string(k) + " X" + std::to_string(k + 1)));
      }
      break;
    case RepKind::IsingHomogeneous:
      rep.n_sites = m + 1;
      if (rep.n_sites > W) throw ConstructionError("Ising chain longer than 64 sites");
      for (int j = 1; j <= m; ++j)
        g.push_back(ps(rep.n_sites, "X" + std::to_string(j) + " Y" + std::to_string(j + 1)));
      break;
    case RepKind::FFDBasic:
      rep.n_sites = m + 2;
      if (rep.n_sites > W) throw ConstructionError("FFDBasic needs m <= 62");
      for (int j = 1; j <= m; ++j)
        g.push_back(ps(rep.n_sites, "X" + std::to_string(j) + " X" + std::to_string(j + 1) + " Z" +
                                        std::to_string(j + 2)));
      break;
    case RepKind::FFDCut: {
      rep.n_sites = m;
      if (m > W) throw ConstructionError("FFDCut needs m <= 64");
      Representation basic = build_representation(RepKind::FFDBasic, std::min(m, 62));
      for (int j = 1; j <= m; ++j) {
        const PauliString& b = basic.h(j);
        std::uint64_t keep = m >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
        g.push_back(PauliString(m, (b.x_mask() >> 1) & keep, (b.z_mask() >> 1) & keep, b.phase_exp()));
      }
      break;
    }
    case RepKind::FFDShift6: {
      for (int j = 1; j <= m; ++j) g.push_back(shift6_term(j, W));
      rep.n_sites = max_site_of(g);
      g = rewidth(g, rep.n_sites);
      break;
    }
    case RepKind::FFDMinimal: {
      if (m % 6 == 2) {
        int k = m / 6;
        rep.n_sites = 3 * k + 1;
        g.push_back(ps(W, "Y1 Z2").truncated(rep.n_sites));
        for (int j = 2; j <= m; ++j) g.push_back(shift6_term(j - 1, rep.n_sites));
      } else {
        for (int j = 1; j <= m; ++j) g.push_back(minimal_term(j, W));
        rep.n_sites = max_site_of(g);
        g = rewidth(g, rep.n_sites);
      }
      break;
    }
  }
  if (!verify_relations(rep).empty())
    throw ConstructionError("construction of " + to_string(kind) + " with m=" + std::to_string(m) +
                            " violates its algebra relations");
  return rep;
}

std::vector<RelationViolation> verify_relations(const Representation& rep) {
  std::vector<RelationViolation> out;
  for (int j = 1; j <= rep.m; ++j) {
    PauliString sq = multiply(rep.h(j), rep.h(j));
    if (!sq.is_identity() || sq.phase_exp() != 0) out.push_back({j, j, "square"});
    for (int k = j + 1; k <= rep.m; ++k) {
      bool anti = expect_anticommute(rep.kind, j, k);
      if (commutes(rep.h(j), rep.h(k)) == anti) out.push_back({j, k, anti ? "anticommute" : "commute"});
    }
  }
  return out;
}

int gf2_rank(const std::vector<PauliString>& ops) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  for (const auto& p : ops) rows.emplace_back(p.x_mask(), p.z_mask());
  int rank = 0;
  for (int col = 0; col < 128 && rank < static_cast<int>(rows.size()); ++col) {
    auto bit = [col](const std::pair<std::uint64_t, std::uint64_t>& r) {
      return col < 64 ? (r.first >> col) & 1 : (r.second >> (col - 64)) & 1;
    };
    std::size_t piv = rank;
    while (piv < rows.size() && !bit(rows[piv])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != static_cast<std::size_t>(rank) && bit(rows[r])) {
        rows[r].first ^= rows[rank].first;
        rows[r].second ^= rows[rank].second;
      }
    }
    ++rank;
  }
  return rank;
}

std::string AlgebraWord::to_string() const {
  std::ostringstream out;
  out << "(" << coefficient.real() << (coefficient.imag() < 0 ? "-" : "+") << std::abs(coefficient.imag()) << "i)";
  if (indices.empty()) out << " 1";
  for (int j : indices) out << " h" << j;
  return out.str();
}

std::vector<AlgebraWord> central_elements(int m) {
  std::vector<AlgebraWord> out;
  if (m < 1) return out;
  const cplx I(0, 1);
  auto triples = [&](int first) {
    AlgebraWord w;
    for (int s = first; s + 2 <= m; s += 6) {
      w.indices.insert(w.indices.end(), {s, s + 1, s + 2});
      w.coefficient *= I;
    }
    return w;
  };
  switch (m % 6) {
    case 4:
      out.push_back(triples(1));
      out.push_back(triples(2));
      break;
    case 5: out.push_back(triples(2)); break;
    case 3: out.push_back(triples(1)); break;
    default: break;
  }
  if (m % 3 == 1) {
    AlgebraWord a;
    for (int j = 1; j <= m; j += 3) a.indices.push_back(j);
    out.push_back(a);
  }
  return out;
}

AlgebraWord normal_order(const AlgebraWord& word, RepKind kind) {
  AlgebraWord w = word;
  std::vector<int>& v = w.indices;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == v[i + 1]) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i), v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
      if (v[i] > v[i + 1]) {
        if (expect_anticommute(kind, v[i], v[i + 1])) w.coefficient = -w.coefficient;
        std::swap(v[i], v[i + 1]);
        changed = true;
      }
    }
  }
  return w;
}

int transpose_sign(const AlgebraWord& word, RepKind kind) {
  AlgebraWord rev = word;
  std::reverse(rev.indices.begin(), rev.indices.end());
  rev.coefficient = 1.0;
  AlgebraWord ordered = normal_order(rev, kind);
  AlgebraWord base = normal_order(AlgebraWord{word.indices, 1.0}, kind);
  return ordered.coefficient.real() * base.coefficient.real() > 0 ? 1 : -1;
}

PauliString realize(const Representation& rep, const AlgebraWord& word) {
  int phase = -1;
  for (int k = 0; k < 4; ++k)
    if (std::abs(word.coefficient - i_pow(k)) < 1e-12) phase = k;
  if (phase < 0) throw ValidationError("word coefficient is not a power of i");
  PauliString out(rep.n_sites);
  for (int j : word.indices) out = multiply(out, rep.h(j));
  return out.times_i(phase);
}

Matrix realize_dense(const Representation& rep, const AlgebraWord& word) {
  Matrix out = identity(rep.n_sites);
  for (auto it = word.indices.rbegin(); it != word.indices.rend(); ++it) apply_left(out, rep.h(*it), 0.0, 1.0);
  return word.coefficient * out;
}

PauliString boundary_operator(const Representation& rep) {
  if (!is_ffd(rep.kind)) throw ConstructionError("boundary operator is defined for FFD representations only");
  const int m = rep.m;
  if (rep.kind == RepKind::FFDBasic) return PauliString::single(rep.n_sites, 'X', m + 2);
  if (rep.kind == RepKind::FFDMinimal && m % 6 == 0) {
    AlgebraWord w;
    for (int s = 2; s + 2 <= m - 2; s += 6) {
      w.indices.insert(w.indices.end(), {s, s + 1, s + 2});
      w.coefficient *= cplx(0, 1);
    }
    return realize(rep, w);
  }
  if (rep.kind == RepKind::FFDMinimal && m % 6 == 2) {
    AlgebraWord w;
    for (int j = 1; j <= m - 1; j += 3) w.indices.push_back(j);
    return realize(rep, w);
  }
  // Solve the symplectic system over GF(2): <chi, h_j> = [j == m].
  const int n = rep.n_sites;
  struct Row {
    std::uint64_t a, b;  // coefficients of chi's x bits and z bits
    bool rhs;
  };
  std::vector<Row> rows;
  for (int j = 1; j <= m; ++j) rows.push_back({rep.h(j).z_mask(), rep.h(j).x_mask(), j == m});
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  auto bit = [](const Row& r, int col) { return col < 64 ? (r.a >> col) & 1 : (r.b >> (col - 64)) & 1; };
  std::vector<int> cols;
  for (int c = 0; c < n; ++c) cols.push_back(c);
  for (int c = 0; c < n; ++c) cols.push_back(64 + c);
  for (int col : cols) {
    std::size_t piv = rank;
    while (piv < rows.size() && !bit(rows[piv], col)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && bit(rows[r], col)) {
        rows[r].a ^= rows[rank].a;
        rows[r].b ^= rows[rank].b;
        rows[r].rhs ^= rows[rank].rhs;
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r].rhs) throw ConstructionError("no boundary operator exists for this representation");
  std::uint64_t x = 0, z = 0;
  for (std::size_t r = 0; r < rank; ++r) {
    if (!rows[r].rhs) continue;
    int col = pivot_col[r];
    if (col < 64) x |= std::uint64_t{1} << col;
    else z |= std::uint64_t{1} << (col - 64);
  }
  return PauliString(n, x, z, 0);
}

}  // namespace ffd
