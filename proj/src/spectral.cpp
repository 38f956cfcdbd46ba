#include "ffd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "ffd/circuits.hpp"
#include "ffd/error.hpp"

namespace ffd {

namespace {

constexpr double kPi = std::numbers::pi;

double circ_dist(double a, double b) { return std::abs(wrap_angle(a - b)); }

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int log2_exact(int v) {
  if (v <= 0 || (v & (v - 1))) return -1;
  int n = 0;
  while ((1 << n) < v) ++n;
  return n;
}

bool contains(const std::vector<double>& sorted, double x, double tol) {
  for (double y : sorted)
    if (circ_dist(x, y) <= tol) return true;
  return false;
}

// Splits `set` into pairs (x, x + g) along chains of g-translates; returns the lower ends.
bool split_pairs(const std::vector<double>& set, double g, double tol, std::vector<double>& lower) {
  const std::size_t n = set.size();
  std::vector<int> next(n, -1), prev(n, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && circ_dist(set[i] + g, set[j]) <= tol) {
        if (next[i] != -1 || prev[j] != -1) return false;
        next[i] = static_cast<int>(j);
        prev[j] = static_cast<int>(i);
      }
  std::vector<bool> used(n, false);
  lower.clear();
  auto walk = [&](std::size_t start) {
    std::vector<int> chain;
    for (int c = static_cast<int>(start); c != -1 && !used[c]; c = next[c]) {
      used[c] = true;
      chain.push_back(c);
    }
    if (chain.size() % 2) return false;
    for (std::size_t k = 0; k < chain.size(); k += 2) lower.push_back(set[chain[k]]);
    return true;
  };
  for (std::size_t i = 0; i < n; ++i)
    if (prev[i] == -1 && !walk(i)) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i] && !walk(i)) return false;
  return lower.size() * 2 == n;
}

struct Search {
  std::vector<double> target;
  double tol;
  long budget = 20000;
  std::vector<double> modes;
};

bool reproduces(const std::vector<double>& modes, const std::vector<double>& target, double tol) {
  std::vector<double> sums = signed_sums(modes);
  Clustering c = cluster_distinct(sums, tol);
  if (c.count() != static_cast<int>(target.size())) return false;
  for (double t : target)
    if (!contains(c.representatives, t, tol)) return false;
  return true;
}

bool decompose(Search& s, const std::vector<double>& set, std::vector<double>& gs) {
  if (--s.budget < 0) return false;
  if (set.size() == 1) {
    std::vector<double> modes;
    for (double g : gs) modes.push_back(std::abs(wrap_angle(g)) / 2);
    if (reproduces(modes, s.target, s.tol)) {
      s.modes = modes;
      return true;
    }
    // Replacing one mode by pi minus itself shifts every signed sum by pi.
    auto big = std::max_element(modes.begin(), modes.end());
    if (big == modes.end()) return false;
    *big = kPi - *big;
    if (!reproduces(modes, s.target, s.tol)) return false;
    s.modes = modes;
    return true;
  }
  std::vector<double> lower;
  for (std::size_t i = 1; i < set.size(); ++i) {
    double g = wrap_angle(set[i] - set[0]);
    if (!split_pairs(set, g, s.tol, lower)) continue;
    gs.push_back(g);
    std::vector<double> half = lower;
    if (decompose(s, half, gs)) return true;
    gs.pop_back();
    if (s.budget < 0) return false;
  }
  return false;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::FreeFermionic: return "FreeFermionic";
    case Verdict::GenericReflectionSymmetric: return "GenericReflectionSymmetric";
    case Verdict::Intermediate: return "Intermediate";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::vector<double> eigenphases(const Matrix& u, double unitarity_tol) {
  if (u.rows() != u.cols()) throw ValidationError("eigenphases needs a square matrix");
  const Eigen::Index d = u.rows();
  if (d == 0) return {};
  double dev = (u * u.adjoint() - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (dev > unitarity_tol)
    throw ValidationError("matrix is not unitary (max deviation " + std::to_string(dev) + ")");
  Eigen::ComplexEigenSolver<Matrix> es(u, false);
  if (es.info() != Eigen::Success) throw ValidationError("eigen-decomposition failed");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    cplx l = es.eigenvalues()(i);
    out.push_back(wrap_angle(std::arg(l / std::abs(l))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Clustering cluster_distinct(std::vector<double> values, double tol, bool circular) {
  Clustering out;
  if (values.empty()) return out;
  if (circular)
    for (double& v : values) v = wrap_angle(v);
  std::sort(values.begin(), values.end());
  std::vector<std::vector<double>> groups{{values[0]}};
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] - values[i - 1] <= tol) groups.back().push_back(values[i]);
    else groups.push_back({values[i]});
  }
  if (circular && groups.size() > 1 && groups.front().front() + 2 * kPi - groups.back().back() <= tol) {
    for (double v : groups.back()) groups.front().push_back(v - 2 * kPi);
    groups.pop_back();
  }
  for (const auto& g : groups) {
    double mean = 0;
    for (double v : g) mean += v;
    mean /= static_cast<double>(g.size());
    out.representatives.push_back(circular ? wrap_angle(mean) : mean);
    out.counts.push_back(static_cast<int>(g.size()));
  }
  if (circular) {
    std::vector<std::size_t> order(out.representatives.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return out.representatives[a] < out.representatives[b]; });
    Clustering sorted;
    for (std::size_t i : order) {
      sorted.representatives.push_back(out.representatives[i]);
      sorted.counts.push_back(out.counts[i]);
    }
    return sorted;
  }
  return out;
}

std::pair<int, int> ratio_signature(const std::vector<double>& phases, double tol) {
  Clustering c = cluster_distinct(phases, tol);
  std::vector<double> diffs;
  diffs.reserve(c.representatives.size() * c.representatives.size());
  for (double a : c.representatives)
    for (double b : c.representatives) diffs.push_back(wrap_angle(a - b));
  return {c.count(), cluster_distinct(diffs, tol).count()};
}

SpectralSignature classify_phases(std::vector<double> phases, double tol) {
  SpectralSignature sig;
  sig.tol = tol;
  for (double& p : phases) p = wrap_angle(p);
  std::sort(phases.begin(), phases.end());
  sig.phases = phases;
  Clustering c = cluster_distinct(phases, tol);
  sig.distinct = c.representatives;
  sig.multiplicities = c.counts;
  auto [nd, ndd] = ratio_signature(phases, tol);
  sig.n_distinct = nd;
  sig.n_distinct_diffs = ndd;
  if (!c.counts.empty() &&
      std::all_of(c.counts.begin(), c.counts.end(), [&](int k) { return k == c.counts.front(); }))
    sig.uniform_degeneracy = c.counts.front();
  sig.conjugation_symmetric = true;
  for (std::size_t i = 0; i < c.representatives.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < c.representatives.size(); ++j)
      if (circ_dist(-c.representatives[i], c.representatives[j]) <= tol && c.counts[i] == c.counts[j]) found = true;
    if (!found) sig.conjugation_symmetric = false;
  }

  const int n = log2_exact(nd);
  if (nd == 0 || nd == 1) {
    sig.verdict = Verdict::Inconclusive;
  } else if (n < 0) {
    sig.verdict = Verdict::Intermediate;
  } else if (n >= 3) {
    if (ndd == ipow(3, n)) sig.verdict = Verdict::FreeFermionic;
    else if (ndd == 2 * ipow(4, n - 1) + 1) sig.verdict = Verdict::GenericReflectionSymmetric;
    else sig.verdict = Verdict::Intermediate;
  } else {
    // Two or four distinct values: every reflection-symmetric spectrum with a
    // uniform degeneracy is free, so the counts alone cannot discriminate.
    bool shaped = ndd == ipow(3, n) && sig.conjugation_symmetric && sig.uniform_degeneracy.has_value();
    sig.verdict = shaped ? Verdict::FreeFermionic : Verdict::Inconclusive;
  }
  if (sig.verdict == Verdict::FreeFermionic) {
    try {
      sig.modes = extract_modes(sig);
    } catch (const ExtractionError&) {
      sig.verdict = Verdict::Intermediate;
    }
  }
  return sig;
}

SpectralSignature classify(const Matrix& u, double tol) { return classify_phases(eigenphases(u), tol); }

std::vector<double> signed_sums(const std::vector<double>& modes) {
  const std::size_t n = modes.size();
  std::vector<double> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    double s = 0;
    for (std::size_t k = 0; k < n; ++k) s += ((mask >> k) & 1) ? -modes[k] : modes[k];
    out.push_back(wrap_angle(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> extract_modes(const SpectralSignature& sig) {
  if (sig.n_distinct == 1) {
    if (circ_dist(sig.distinct.front(), 0) > sig.tol)
      throw ExtractionError("single distinct phase away from zero has no mode decomposition");
    int n = log2_exact(static_cast<int>(sig.phases.size()));
    return std::vector<double>(static_cast<std::size_t>(std::max(n, 0)), 0.0);
  }
  if (log2_exact(sig.n_distinct) < 0)
    throw ExtractionError("number of distinct phases is not a power of two");
  Search s{sig.distinct, sig.tol};
  std::vector<double> gs;
  if (!decompose(s, sig.distinct, gs)) throw ExtractionError("phases admit no signed-sum decomposition");
  std::vector<double> modes = s.modes;
  std::sort(modes.begin(), modes.end(), std::greater<>());
  return modes;
}

bool same_phases(std::vector<double> a, std::vector<double> b, double tol) { return phase_distance(a, b) <= tol; }

double phase_distance(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::sort(a.begin(), a.end());
  std::vector<bool> used(b.size(), false);
  double worst = 0;
  for (double x : a) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t at = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      double d = circ_dist(x, b[j]);
      if (d < best) {
        best = d;
        at = j;
      }
    }
    used[at] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

std::string phases_csv(const std::vector<double>& phases) {
  std::ostringstream o;
  o.precision(17);
  o << "index,phase\n";
  for (std::size_t i = 0; i < phases.size(); ++i) o << i << "," << phases[i] << "\n";
  return o.str();
}

}  // namespace ffd
