#include "parafock/algebra.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "parafock/parallel.hpp"

namespace parafock {

namespace {

struct Target {
  GZPattern pattern;
  double coefficient;
};

// Square root of an integer factor; zero means the term is absent.
double isqrt(int n) { return n > 0 ? std::sqrt(static_cast<double>(n)) : 0.0; }

// At most two targets per source pattern (raising/lowering m12 or m22).
std::array<Target, 2> action(Generator g, const GZPattern& m, double p) {
  const int a = m.m12, b = m.m22, c = m.m11;
  auto f = [p](int m12, int m22) {
    return (m22 >= 0 && m12 >= m22) ? structure_f(m12, m22, p) : StructureF{};
  };
  switch (g) {
    case Generator::B1Plus: {
      const auto s = f(a, b);
      return {{{{a + 1, b, c + 1}, isqrt(c - b + 1) * s.f1},
               {{a, b + 1, c + 1}, -isqrt(a - c) * s.f2}}};
    }
    case Generator::B2Plus: {
      const auto s = f(a, b);
      return {{{{a + 1, b, c}, isqrt(a - c + 1) * s.f1}, {{a, b + 1, c}, isqrt(c - b) * s.f2}}};
    }
    case Generator::B1Minus:
      return {{{{a - 1, b, c - 1}, isqrt(c - b) * f(a - 1, b).f1},
               {{a, b - 1, c - 1}, -isqrt(a - c + 1) * f(a, b - 1).f2}}};
    case Generator::B2Minus:
      return {{{{a - 1, b, c}, isqrt(a - c) * f(a - 1, b).f1},
               {{a, b - 1, c}, isqrt(c - b + 1) * f(a, b - 1).f2}}};
    case Generator::H1:
      return {{{m, p / 2.0 + c}, {m, 0.0}}};
    case Generator::H2:
      return {{{m, p / 2.0 + a + b - c}, {m, 0.0}}};
  }
  return {};
}

}  // namespace

std::string_view to_string(Generator g) noexcept {
  switch (g) {
    case Generator::B1Plus: return "b1+";
    case Generator::B1Minus: return "b1-";
    case Generator::B2Plus: return "b2+";
    case Generator::B2Minus: return "b2-";
    case Generator::H1: return "h1";
    case Generator::H2: return "h2";
  }
  return "?";
}

std::optional<Generator> parse_generator(std::string_view name) noexcept {
  for (auto g : kAllGenerators)
    if (to_string(g) == name) return g;
  return std::nullopt;
}

Generator odd_generator(int mode, int sign) {
  if (mode == 1) return sign > 0 ? Generator::B1Plus : Generator::B1Minus;
  if (mode == 2) return sign > 0 ? Generator::B2Plus : Generator::B2Minus;
  throw std::invalid_argument("mode must be 1 or 2");
}

StructureF structure_f(int m12, int m22, double p) {
  if (m22 < 0 || m12 < m22) throw std::invalid_argument("structure_f requires m12 >= m22 >= 0");
  const double sign = (m22 % 2 == 0) ? 1.0 : -1.0;
  const int d = m12 - m22;
  const double f1 = sign * std::sqrt((m12 + 2 + even_indicator(m12) * (p - 2.0)) /
                                     static_cast<double>(d + 1 + odd_indicator(d)));
  const double f2 = std::sqrt((m22 + 1 + even_indicator(m22) * (p - 2.0)) /
                              static_cast<double>(d + 1 - odd_indicator(d)));
  return {f1, f2};
}

SparseOperator build_generator(Generator g, const FockBasis& basis) {
  std::vector<MatrixEntry> entries;
  entries.reserve(2 * basis.size());
  std::set<std::size_t> boundary;
  const auto patterns = basis.patterns();
  for (std::size_t col = 0; col < patterns.size(); ++col) {
    for (const auto& t : action(g, patterns[col], basis.p())) {
      if (t.coefficient == 0.0 || !t.pattern.valid()) continue;
      if (auto row = basis.find(t.pattern))
        entries.push_back({*row, col, t.coefficient});
      else
        boundary.insert(col);
    }
  }
  return SparseOperator::from_entries(basis.size(), std::move(entries), std::move(boundary));
}

SparseOperator adjoint(const SparseOperator& a) { return a.adjoint(); }

SparseOperator bracket(const SparseOperator& a, const SparseOperator& b, BracketKind kind) {
  if (a.dim() != b.dim()) throw std::invalid_argument("bracket: dimension mismatch");
  const auto ab = a * b;
  const auto ba = b * a;
  return kind == BracketKind::Anti ? ab + ba : ab - ba;
}

std::string TripleRelation::label() const {
  auto s = [](int v) { return v > 0 ? '+' : '-'; };
  std::string out = "[{b";
  out += std::to_string(j);
  out += s(xi);
  out += ",b";
  out += std::to_string(k);
  out += s(eta);
  out += "},b";
  out += std::to_string(l);
  out += s(eps);
  out += "]";
  return out;
}

bool TripleReport::all_passed() const noexcept {
  for (const auto& r : relations)
    if (!r.passed) return false;
  return !relations.empty();
}

double TripleReport::max_deviation() const noexcept {
  double m = 0.0;
  for (const auto& r : relations) m = std::max(m, r.max_deviation);
  return m;
}

TripleReport verify_triple_relations(const FockBasis& basis, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  // b[mode-1][sign index], sign index 0 -> '+', 1 -> '-'
  SparseOperator b[2][2];
  for (int mode = 1; mode <= 2; ++mode)
    for (int si = 0; si < 2; ++si)
      b[mode - 1][si] = build_generator(odd_generator(mode, si == 0 ? 1 : -1), basis);

  TripleReport report;
  report.tolerance = tol;
  const auto cols = basis.interior(3);
  report.interior_columns = cols.size();

  report.relations.resize(64);
  parallel_for(64, [&](std::size_t idx) {
    TripleRelation r;
    r.j = 1 + static_cast<int>((idx >> 5) & 1);
    r.k = 1 + static_cast<int>((idx >> 4) & 1);
    r.l = 1 + static_cast<int>((idx >> 3) & 1);
    const int xi_i = (idx >> 2) & 1, eta_i = (idx >> 1) & 1, eps_i = idx & 1;
    r.xi = xi_i == 0 ? 1 : -1;
    r.eta = eta_i == 0 ? 1 : -1;
    r.eps = eps_i == 0 ? 1 : -1;

    const auto& A = b[r.j - 1][xi_i];
    const auto& B = b[r.k - 1][eta_i];
    const auto& C = b[r.l - 1][eps_i];
    auto lhs = bracket(bracket(A, B, BracketKind::Anti), C, BracketKind::Comm);
    auto rhs = SparseOperator(basis.size());
    if (r.j == r.l && r.eps != r.xi) rhs = rhs + B.scaled(double(r.eps - r.xi));
    if (r.k == r.l && r.eps != r.eta) rhs = rhs + A.scaled(double(r.eps - r.eta));
    r.max_deviation = (lhs - rhs).max_abs_on_columns(cols);
    r.passed = r.max_deviation <= tol;
    report.relations[idx] = r;
  });
  return report;
}

double t1_eigenvalue(double zeta1, int n) noexcept {
  return n + 1 + even_indicator(n) * (2.0 * zeta1 - 1.0);
}

double b1_lowering_factor(double zeta1, int n) noexcept {
  return n + odd_indicator(n) * (2.0 * zeta1 - 1.0);
}

FockVector t1_inverse_apply(const FockVector& v, int zero_mode_m11) {
  const auto& basis = v.basis();
  const double zeta1 = basis.p() / 2.0 + zero_mode_m11;
  FockVector out(basis);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == Complex{}) continue;
    const int n = basis[i].m11 - zero_mode_m11;
    if (n < 0)
      throw std::invalid_argument("t1_inverse_apply: component below the zero-mode weight");
    const double lambda = t1_eigenvalue(zeta1, n);
    if (!(lambda > 0.0)) throw std::invalid_argument("t1_inverse_apply: nonpositive T1 eigenvalue");
    out[i] = v[i] / lambda;
  }
  return out;
}

}  // namespace parafock
