#include "ffd/pauli.hpp"

#include <atomic>
#include <bit>
#include <sstream>
#include <vector>

#include "ffd/error.hpp"
#include "ffd/kernels.hpp"

namespace ffd {

namespace {

std::atomic<int> g_dense_cap{14};

int mod4(int k) { return ((k % 4) + 4) % 4; }

std::uint64_t site_bits(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void check_width(int n) {
  if (n < 0 || n > PauliString::kMaxSites)
    throw DimensionError("Pauli string width " + std::to_string(n) + " out of range");
}

}  // namespace

PauliString::PauliString(int n_sites) : n_(n_sites) { check_width(n_sites); }

PauliString::PauliString(int n_sites, std::uint64_t x_mask, std::uint64_t z_mask, int phase_exp)
    : n_(n_sites), x_(x_mask), z_(z_mask), phase_(mod4(phase_exp)) {
  check_width(n_sites);
  if ((x_ | z_) & ~site_bits(n_))
    throw DimensionError("Pauli masks set bits beyond site " + std::to_string(n_));
}

PauliString PauliString::single(int n_sites, char op, int site) {
  if (site < 1 || site > n_sites)
    throw IndexError("site " + std::to_string(site) + " outside 1.." + std::to_string(n_sites));
  std::uint64_t bit = std::uint64_t{1} << (site - 1);
  switch (op) {
    case 'I': return PauliString(n_sites);
    case 'X': return PauliString(n_sites, bit, 0);
    case 'Y': return PauliString(n_sites, bit, bit);
    case 'Z': return PauliString(n_sites, 0, bit);
    default: throw ParseError(std::string("unknown Pauli operator '") + op + "'");
  }
}

PauliString PauliString::parse(const std::string& text, int n_sites) {
  std::istringstream in(text);
  std::string tok;
  int phase = 0;
  bool first = true;
  struct Item {
    char op;
    int site;
  };
  std::vector<Item> items;
  int max_site = 0;
  while (in >> tok) {
    if (first) {
      first = false;
      if (tok == "+1" || tok == "1") { phase = 0; continue; }
      if (tok == "+i" || tok == "i") { phase = 1; continue; }
      if (tok == "-1") { phase = 2; continue; }
      if (tok == "-i") { phase = 3; continue; }
    }
    if (tok == "I") continue;
    char op = tok[0];
    if (op != 'X' && op != 'Y' && op != 'Z' && op != 'I')
      throw ParseError("bad Pauli token '" + tok + "'");
    int site = 0;
    try {
      std::size_t used = 0;
      site = std::stoi(tok.substr(1), &used);
      if (used != tok.size() - 1) throw ParseError("");
    } catch (...) {
      throw ParseError("bad site index in token '" + tok + "'");
    }
    if (site < 1) throw ParseError("site index must be positive in '" + tok + "'");
    items.push_back({op, site});
    max_site = std::max(max_site, site);
  }
  int n = n_sites > 0 ? n_sites : std::max(max_site, 1);
  if (max_site > n) throw ParseError("site " + std::to_string(max_site) + " beyond declared width");
  PauliString out(n);
  out.phase_ = phase;
  for (const Item& it : items) out = multiply(out, single(n, it.op, it.site));
  return out;
}

char PauliString::op_at(int site) const {
  if (site < 1 || site > n_) throw IndexError("site out of range");
  bool x = (x_ >> (site - 1)) & 1;
  bool z = (z_ >> (site - 1)) & 1;
  return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

bool PauliString::is_hermitian() const { return (phase_ % 2) == 0; }

int PauliString::weight() const { return std::popcount(x_ | z_); }

int PauliString::max_site() const {
  std::uint64_t s = x_ | z_;
  return s == 0 ? 0 : 64 - std::countl_zero(s);
}

PauliString PauliString::with_phase(int phase_exp) const {
  PauliString out = *this;
  out.phase_ = mod4(phase_exp);
  return out;
}

PauliString PauliString::shifted(int by, int n_sites) const {
  if (by < 0) throw IndexError("negative shift");
  if (max_site() + by > n_sites) throw DimensionError("shift runs past the end of the chain");
  return PauliString(n_sites, x_ << by, z_ << by, phase_);
}

PauliString PauliString::truncated(int n_sites) const {
  std::uint64_t keep = site_bits(n_sites);
  return PauliString(n_sites, x_ & keep, z_ & keep, phase_);
}

std::string PauliString::to_string() const {
  static const char* prefix[4] = {"+1", "+i", "-1", "-i"};
  std::string out = prefix[phase_];
  if (is_identity()) return out + " I";
  for (int j = 1; j <= n_; ++j) {
    char c = op_at(j);
    if (c != 'I') out += " " + std::string(1, c) + std::to_string(j);
  }
  return out;
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  if (p.n_sites() != q.n_sites())
    throw DimensionError("multiply: " + std::to_string(p.n_sites()) + " vs " +
                         std::to_string(q.n_sites()) + " sites");
  std::uint64_t x1 = p.x_mask(), z1 = p.z_mask(), x2 = q.x_mask(), z2 = q.z_mask();
  std::uint64_t x3 = x1 ^ x2, z3 = z1 ^ z2;
  int k = p.phase_exp() + q.phase_exp() + std::popcount(x1 & z1) + std::popcount(x2 & z2) +
          2 * std::popcount(z1 & x2) - std::popcount(x3 & z3);
  return PauliString(p.n_sites(), x3, z3, k);
}

bool commutes(const PauliString& p, const PauliString& q) {
  if (p.n_sites() != q.n_sites()) throw DimensionError("commutes: site counts differ");
  return std::popcount((p.x_mask() & q.z_mask()) ^ (p.z_mask() & q.x_mask())) % 2 == 0;
}

cplx i_pow(int k) {
  switch (mod4(k)) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

int dense_cap() { return g_dense_cap.load(); }

void set_dense_cap(int n_sites) {
  if (n_sites < 1 || n_sites > 30) throw SizeError("dense cap must lie in 1..30");
  g_dense_cap.store(n_sites);
}

Matrix to_dense(const PauliString& p) {
  PauliAction act(p);
  Matrix m = Matrix::Zero(act.dim(), act.dim());
  for (Eigen::Index b = 0; b < act.dim(); ++b) m(b ^ act.flip(), b) = act.column_value(b);
  return m;
}

}  // namespace ffd
