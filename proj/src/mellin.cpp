#include "gms/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gms/cgamma.hpp"

namespace gms {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPoleTol = 1e-8;

std::string rat_str(const Rat& r) { return r.get_str(); }

// Distance from w to the nearest non-positive integer.
double dist_to_nonpos_int(std::complex<double> w) {
  double n = std::round(w.real());
  if (n > 0.0) n = 0.0;
  return std::abs(w - n);
}

const std::vector<size_t>* cycle_of(const NormalizedGM& ngm, size_t k,
                                    size_t* pos) {
  for (const auto& c : ngm.cycles) {
    auto it = std::find(c.begin(), c.end(), k);
    if (it != c.end()) {
      if (pos) *pos = static_cast<size_t>(it - c.begin());
      return &c;
    }
  }
  return nullptr;
}

std::complex<double> line_at(const GammaProduct::LinearZ2& line,
                             std::complex<double> z1,
                             std::complex<double> z2) {
  return rat_to_double(line.a1) * z1 + rat_to_double(line.a2) * z2 +
         rat_to_double(line.b);
}

}  // namespace

std::complex<double> affine_at(const AffineForm& a, std::complex<double> z) {
  return rat_to_double(a.slope) * z + rat_to_double(a.intercept);
}

EDFSpec block_edf(const NormalizedGM& ngm, const SpectraReport& sr,
                  std::pair<long, long> d, size_t k) {
  size_t pos = 0;
  const std::vector<size_t>* cycle = cycle_of(ngm, k, &pos);
  if (!cycle) {
    throw std::runtime_error("block_edf: column " + std::to_string(k) +
                             " does not lie on a cycle of the permutation");
  }
  const long d1 = d.first;
  const long d2 = d.second;
  EDFSpec e;
  e.constant = Rat(1);
  long o = 0;       // accumulated first-axis offset Σ(η̃+1)
  long off2 = 0;    // accumulated second-axis offset Σ(1+δ̃)
  const size_t nu = cycle->size();
  struct Step {
    long offset;
    long et;
    size_t col;
  };
  std::vector<Step> steps;
  steps.reserve(nu);
  for (size_t t = 0; t < nu; ++t) {
    const size_t col = (*cycle)[(pos + t) % nu];
    const int row = ngm.closed_row[col];
    if (row < 0) {
      throw std::logic_error("block_edf: cycle column " + std::to_string(col) +
                             " has no closed row");
    }
    if (ngm.pvals1[row] == 0 || ngm.pvals2[row] == 0) {
      throw std::logic_error("block_edf: closed row " + std::to_string(row) +
                             " carries a vanishing coefficient");
    }
    const long et = ngm.eta_tilde[row];
    const long dt = ngm.delta_tilde[row];
    // The row weight determines the column ratio exactly; a mismatch means
    // the normal form is inconsistent.
    if (rat(ngm.L_Fprime[row], sr.p1) - 1 - et != ngm.lambda[col]) {
      throw std::logic_error("block_edf: row " + std::to_string(row) +
                             " weight disagrees with the ratio of column " +
                             std::to_string(col));
    }
    steps.push_back({o, et, col});
    e.constant *= rat(sr.p2, sr.p1) * ngm.pvals2[row] / ngm.pvals1[row];
    o += et + 1;
    off2 += dt + 1;
  }
  // One full turn must displace the arguments along the direction (d1, -d2);
  // the generic blocks come back after exactly (d1, -d2), while some come
  // back only after an integer multiple of it.  Any other displacement
  // leaves the equation open.
  if (o <= 0 || o * d2 != off2 * d1) {
    std::ostringstream msg;
    msg << "block does not close: one turn of the cycle through column " << k
        << " shifts the arguments by (" << o << ", " << off2
        << "), which is not proportional to (" << d1 << ", " << d2 << ")";
    throw std::runtime_error(msg.str());
  }
  e.shift = Rat(o);
  for (const Step& s : steps) {
    e.numer_roots.push_back(Rat(o - s.offset - s.et));
    e.denom_roots.push_back(Rat(o - s.offset) + ngm.lambda[s.col] + 1);
  }
  e.second_shift = -off2;
  return e;
}

GammaProduct solve_edf(const EDFSpec& e) {
  if (e.numer_roots.size() != e.denom_roots.size()) {
    throw std::runtime_error(
        "solve_edf: mismatched root counts (" +
        std::to_string(e.numer_roots.size()) + " numerator vs " +
        std::to_string(e.denom_roots.size()) + " denominator)");
  }
  if (!(e.shift > 0)) {
    throw std::runtime_error("solve_edf: shift must be positive");
  }
  if (e.constant == 0) {
    throw std::runtime_error("solve_edf: constant must be nonzero");
  }
  GammaProduct gp;
  gp.base = e.constant;
  gp.shift = e.shift;
  const Rat inv = Rat(1) / e.shift;
  // Shifting z by α turns each argument a(z) into a(z) − 1, so every
  // numerator Gamma divides the product by a(z) − 1 = −(z+γ)/α and every
  // denominator Gamma multiplies it by −(z+β)/α; with equal counts the
  // −1/α factors cancel and the ratio is exactly c·∏(z+β)/(z+γ).
  for (const Rat& g : e.denom_roots) {
    gp.gamma_num.push_back({-inv, 1 - g * inv});
  }
  for (const Rat& b : e.numer_roots) {
    gp.gamma_den.push_back({-inv, 1 - b * inv});
  }
  return gp;
}

GammaProduct mellin_formula(const GMSystem& gm, const NormalizedGM& ngm,
                            const SpectraReport& sr, size_t k, long q) {
  if (k >= ngm.mu) {
    throw std::invalid_argument("mellin_formula: column index out of range");
  }
  if (q < 0) {
    throw std::invalid_argument(
        "mellin_formula: exponent index must be non-negative");
  }
  const auto d = newton_d(gm.spec.W);

  // Walk open edges from k to a cycle, collecting one rational factor per
  // step and accumulating the argument shifts.  An open row relates the two
  // columns it touches in either direction: solving it for the source column
  // divides by the target's value at shifted arguments, solving it for the
  // target divides by the source's.  Walk whichever orientation leads on.
  Rat pre(1);
  std::vector<std::pair<AffineForm, AffineForm>> rats;
  long tau = 0;    // accumulated first-axis shift
  long sigma = 0;  // accumulated second-axis shift
  size_t cur = k;
  std::vector<char> visited(ngm.mu, 0);
  while (!cycle_of(ngm, cur, nullptr)) {
    if (visited[cur]) {
      throw std::logic_error("mellin_formula: open edges form a loop");
    }
    visited[cur] = 1;
    const NormalizedGM::OpenEdge* fwd = nullptr;
    const NormalizedGM::OpenEdge* bwd = nullptr;
    bool fwd_many = false;
    bool bwd_many = false;
    for (const auto& oe : ngm.open_edges) {
      if (oe.from == cur) {
        fwd_many = fwd_many || fwd != nullptr;
        fwd = &oe;
      }
      if (oe.to == cur) {
        bwd_many = bwd_many || bwd != nullptr;
        bwd = &oe;
      }
    }
    if (fwd) {
      if (fwd_many) {
        throw std::runtime_error("mellin_formula: column " +
                                 std::to_string(cur) +
                                 " starts several open recurrences; no "
                                 "unique chain exists");
      }
      const size_t r = fwd->row;
      const long et = ngm.eta_tilde[r];
      const long dt = ngm.delta_tilde[r];
      pre *= rat(sr.p2, sr.p1) * ngm.pvals2[r] / ngm.pvals1[r];
      rats.push_back({AffineForm{Rat(1), Rat(tau - et)},
                      AffineForm{Rat(1), Rat(tau) + ngm.lambda[cur] + 1}});
      tau -= et + 1;
      sigma += dt + 1;
      cur = fwd->to;
    } else if (bwd) {
      if (bwd_many) {
        throw std::runtime_error("mellin_formula: column " +
                                 std::to_string(cur) +
                                 " ends several open recurrences; no "
                                 "unique chain exists");
      }
      const size_t r = bwd->row;
      const long et = ngm.eta_tilde[r];
      const long dt = ngm.delta_tilde[r];
      pre *= rat(sr.p1, sr.p2) * ngm.pvals1[r] / ngm.pvals2[r];
      rats.push_back(
          {AffineForm{Rat(1), Rat(tau + 1 + et) + ngm.lambda[bwd->from] + 1},
           AffineForm{Rat(1), Rat(tau + 1)}});
      tau += et + 1;
      sigma -= dt + 1;
      cur = bwd->from;
    } else {
      throw std::runtime_error(
          "mellin_formula: no recurrence reaches a closed cycle from column " +
          std::to_string(k));
    }
  }

  GammaProduct gp = solve_edf(block_edf(ngm, sr, d, cur));
  gp.base_shift = Rat(tau);
  for (auto& a : gp.gamma_num) a.intercept += a.slope * Rat(tau);
  for (auto& a : gp.gamma_den) a.intercept += a.slope * Rat(tau);
  gp.prefactor = pre;
  gp.rational_factors = std::move(rats);
  GammaProduct::LinearZ2 line;
  line.a1 = rat(1, d.first);
  line.a2 = rat(1, d.second);
  line.b = rat(tau, d.first) + rat(sigma - q, d.second);
  gp.z2_factor = line;
  return gp;
}

std::complex<double> eval_gamma_product(const GammaProduct& gp,
                                        std::complex<double> z1,
                                        std::complex<double> z2) {
  for (const auto& a : gp.gamma_num) {
    const std::complex<double> w = affine_at(a, z1);
    if (dist_to_nonpos_int(w) < kPoleTol) {
      double n = std::round(w.real());
      if (n > 0.0) n = 0.0;
      const double zp =
          (n - rat_to_double(a.intercept)) / rat_to_double(a.slope);
      std::ostringstream msg;
      msg << "eval_gamma_product: z1 = " << z1
          << " lies within 1e-8 of the Gamma pole at z1 = " << zp;
      throw std::runtime_error(msg.str());
    }
  }
  for (const auto& rf : gp.rational_factors) {
    if (std::abs(affine_at(rf.second, z1)) < kPoleTol) {
      const double zp = -rat_to_double(rf.second.intercept) /
                        rat_to_double(rf.second.slope);
      std::ostringstream msg;
      msg << "eval_gamma_product: z1 = " << z1
          << " lies within 1e-8 of the rational-factor pole at z1 = " << zp;
      throw std::runtime_error(msg.str());
    }
  }
  if (gp.z2_factor && std::abs(line_at(*gp.z2_factor, z1, z2)) < kPoleTol) {
    std::ostringstream msg;
    msg << "eval_gamma_product: (" << z1 << ", " << z2
        << ") lies within 1e-8 of the zero line of the reciprocal factor "
        << rat_str(gp.z2_factor->a1) << " z1 + " << rat_str(gp.z2_factor->a2)
        << " z2 + " << rat_str(gp.z2_factor->b);
    throw std::runtime_error(msg.str());
  }
  // A denominator Gamma at one of its poles annihilates the product.
  for (const auto& a : gp.gamma_den) {
    if (dist_to_nonpos_int(affine_at(a, z1)) < kPoleTol) {
      return {0.0, 0.0};
    }
  }
  if (gp.base == 0) {
    throw std::logic_error("eval_gamma_product: zero base");
  }
  const std::complex<double> cbase(rat_to_double(gp.base), 0.0);
  std::complex<double> sum =
      std::log(cbase) *
      ((z1 + rat_to_double(gp.base_shift)) / rat_to_double(gp.shift));
  for (const auto& a : gp.gamma_num) sum += log_gamma(affine_at(a, z1));
  for (const auto& a : gp.gamma_den) sum -= log_gamma(affine_at(a, z1));
  std::complex<double> v = std::exp(sum) * rat_to_double(gp.prefactor);
  for (const auto& rf : gp.rational_factors) {
    v *= affine_at(rf.first, z1) / affine_at(rf.second, z1);
  }
  if (gp.z2_factor) v /= line_at(*gp.z2_factor, z1, z2);
  return v;
}

double verify_edf_numeric(const GammaProduct& gp, const EDFSpec& e,
                          int n_samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-5.0, 5.0);
  std::uniform_real_distribution<double> im(1.0, 10.0);
  const double alpha = rat_to_double(e.shift);
  const std::complex<double> cbase(rat_to_double(gp.base), 0.0);
  double worst = 0.0;
  for (int s = 0; s < n_samples; ++s) {
    const double sgn = (rng() & 1u) ? 1.0 : -1.0;
    const std::complex<double> z1(re(rng), sgn * im(rng));
    const std::complex<double> z2(re(rng), sgn * im(rng));
    const std::complex<double> z1s = z1 + alpha;
    const std::complex<double> z2s =
        z2 + static_cast<double>(e.second_shift);
    // log M(z1+α, z2+shift₂) − log M(z1, z2), accumulated term by term so
    // nothing overflows; 2πi ambiguities vanish under the final exp.
    std::complex<double> dlog =
        std::log(cbase) * ((z1s - z1) / rat_to_double(gp.shift));
    for (const auto& a : gp.gamma_num) {
      dlog += log_gamma(affine_at(a, z1s)) - log_gamma(affine_at(a, z1));
    }
    for (const auto& a : gp.gamma_den) {
      dlog -= log_gamma(affine_at(a, z1s)) - log_gamma(affine_at(a, z1));
    }
    for (const auto& rf : gp.rational_factors) {
      dlog += std::log(affine_at(rf.first, z1s)) -
              std::log(affine_at(rf.first, z1));
      dlog -= std::log(affine_at(rf.second, z1s)) -
              std::log(affine_at(rf.second, z1));
    }
    if (gp.z2_factor) {
      dlog -= std::log(line_at(*gp.z2_factor, z1s, z2s)) -
              std::log(line_at(*gp.z2_factor, z1, z2));
    }
    std::complex<double> f(rat_to_double(e.constant), 0.0);
    for (const Rat& b : e.numer_roots) f *= z1 + rat_to_double(b);
    for (const Rat& g : e.denom_roots) f /= z1 + rat_to_double(g);
    worst = std::max(worst, std::abs(1.0 - f * std::exp(-dlog)));
  }
  return worst;
}

std::complex<double> NorlundFactor::operator()(std::complex<double> z) const {
  const double phase = 2.0 * kPi * rat_to_double(beta) * sign;
  std::complex<double> prod = std::polar(1.0, phase);
  for (size_t j = 0; j < alphas.size(); ++j) {
    prod *= std::sin(2.0 * kPi * (z + rat_to_double(alphas[j]))) /
            std::sin(2.0 * kPi * (z + rat_to_double(rhos[j])));
  }
  return 1.0 + prod;
}

NorlundFactor norlund_factor(std::vector<Rat> alphas, std::vector<Rat> rhos,
                             int sign) {
  if (alphas.size() != rhos.size()) {
    throw std::invalid_argument(
        "norlund_factor: argument lists must have equal length");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("norlund_factor: sign must be +1 or -1");
  }
  NorlundFactor g;
  g.alphas = std::move(alphas);
  g.rhos = std::move(rhos);
  g.sign = sign;
  g.beta = Rat(-1);
  for (size_t j = 0; j < g.alphas.size(); ++j) {
    g.beta += g.rhos[j] - g.alphas[j];
  }
  return g;
}

NorlundFactor norlund_from_gamma_product(const GammaProduct& gp, int sign) {
  std::vector<Rat> alphas, rhos;
  for (const auto& a : gp.gamma_num) alphas.push_back(a.intercept);
  for (const auto& a : gp.gamma_den) rhos.push_back(a.intercept);
  return norlund_factor(std::move(alphas), std::move(rhos), sign);
}

double norlund_periodicity_residual(const NorlundFactor& g, int n_samples,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  std::uniform_real_distribution<double> im(0.5, 1.5);
  double worst = 0.0;
  for (int s = 0; s < n_samples; ++s) {
    const double sgn = (rng() & 1u) ? 1.0 : -1.0;
    const std::complex<double> z(re(rng), sgn * im(rng));
    worst = std::max(worst, std::abs(g(z + 1.0) - g(z)));
  }
  return worst;
}

std::vector<double> norlund_decay_profile(const NorlundFactor& g, double x,
                                          const std::vector<double>& ys) {
  std::vector<double> out;
  out.reserve(ys.size());
  for (double y : ys) {
    const std::complex<double> z(x, y);
    double logmod = 0.0;
    for (size_t j = 0; j < g.alphas.size(); ++j) {
      logmod += log_gamma(z + rat_to_double(g.alphas[j])).real();
      logmod -= log_gamma(z + rat_to_double(g.rhos[j])).real();
    }
    out.push_back(std::abs(g(z)) * std::exp(logmod));
  }
  return out;
}

SupportCone support_cone(const NormalizedGM& ngm, std::pair<long, long> d,
                         size_t k) {
  if (k >= ngm.mu) {
    throw std::invalid_argument("support_cone: column index out of range");
  }
  const long d1 = d.first;
  const long d2 = d.second;
  const Rat lam = ngm.lambda[k];
  SupportCone c;
  c.vertex = {-(lam + d1), rat(d2, d1) * (lam + d1)};
  c.ineq1 = {Rat(1), Rat(0), lam + d1};
  c.ineq2 = {rat(1, d1), rat(1, d2), Rat(0)};
  c.generator = d1;
  c.projection_seq.push_back(-(lam + d1));
  size_t pos = 0;
  if (const auto* cycle = cycle_of(ngm, k, &pos)) {
    const size_t nu = cycle->size();
    for (size_t j = 1; j < nu; ++j) {
      const size_t col = (*cycle)[(pos + j) % nu];
      c.projection_seq.push_back(-(ngm.lambda[col] + Rat(static_cast<long>(j))));
    }
  }
  return c;
}

std::vector<Rat> gamma_pole_offsets(const GammaProduct& gp) {
  std::vector<Rat> out;
  for (const auto& a : gp.gamma_num) {
    if (a.slope == 0) {
      throw std::logic_error("gamma_pole_offsets: constant Gamma argument");
    }
    out.push_back(-a.intercept / a.slope);
  }
  return out;
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Rat& coeff,
                 const char* sym) {
  if (coeff == 0) return;
  Rat a = coeff;
  if (first) {
    if (a < 0) {
      os << "-";
      a = -a;
    }
  } else {
    os << (a < 0 ? " - " : " + ");
    if (a < 0) a = -a;
  }
  first = false;
  if (sym == nullptr) {
    os << rat_str(a);
  } else if (a == 1) {
    os << sym;
  } else {
    os << rat_str(a) << " " << sym;
  }
}

std::string affine_str(const AffineForm& a) {
  std::ostringstream os;
  bool first = true;
  append_term(os, first, a.slope, "z1");
  append_term(os, first, a.intercept, nullptr);
  if (first) os << "0";
  return os.str();
}

}  // namespace

std::string line_to_string(const SymbolicLine& line) {
  std::ostringstream os;
  bool first = true;
  append_term(os, first, line.c1, "s1");
  append_term(os, first, line.c2, "s2");
  append_term(os, first, line.c0, nullptr);
  if (first) os << "0";
  os << " - " << line.offset;
  return os.str();
}

BFunctionLines b_function_lines(const SpectraReport& sr,
                                std::pair<long, long> d) {
  const long d1 = d.first;
  const long d2 = d.second;
  std::vector<Rat> distinct = sr.lambdas;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  BFunctionLines out;
  for (const Rat& lam : distinct) {
    out.family1.push_back({Rat(1), Rat(0), lam + d1, "alpha"});
  }
  out.family1.push_back({Rat(d2), Rat(d1), Rat(0), "gamma"});
  for (const Rat& lam : distinct) {
    out.family2.push_back({Rat(0), Rat(1), -(rat(d2, d1) * lam), "beta"});
  }
  out.family2.push_back({Rat(d2), Rat(d1), Rat(0), "gamma"});
  return out;
}

std::string gamma_product_to_string(const GammaProduct& gp) {
  std::ostringstream os;
  bool lead = false;
  if (gp.prefactor != 1) {
    os << rat_str(gp.prefactor);
    lead = true;
  }
  if (gp.base != 1) {
    if (lead) os << " * ";
    os << "(" << rat_str(gp.base) << ")^{(z1";
    if (gp.base_shift != 0) {
      os << (gp.base_shift < 0 ? " - " : " + ")
         << rat_str(gp.base_shift < 0 ? -gp.base_shift : gp.base_shift);
    }
    os << ")/" << rat_str(gp.shift) << "}";
    lead = true;
  }
  for (const auto& a : gp.gamma_num) {
    if (lead) os << " * ";
    os << "Gamma(" << affine_str(a) << ")";
    lead = true;
  }
  for (const auto& a : gp.gamma_den) {
    if (lead) os << " / ";
    else os << "1 / ";
    os << "Gamma(" << affine_str(a) << ")";
    lead = true;
  }
  for (const auto& rf : gp.rational_factors) {
    if (lead) os << " * ";
    os << "(" << affine_str(rf.first) << ")/(" << affine_str(rf.second)
       << ")";
    lead = true;
  }
  if (gp.z2_factor) {
    std::ostringstream ls;
    bool first = true;
    append_term(ls, first, gp.z2_factor->a1, "z1");
    append_term(ls, first, gp.z2_factor->a2, "z2");
    append_term(ls, first, gp.z2_factor->b, nullptr);
    if (lead) os << " / (";
    else os << "1 / (";
    os << ls.str() << ")";
    lead = true;
  }
  if (!lead) os << rat_str(gp.prefactor);
  return os.str();
}

}  // namespace gms
