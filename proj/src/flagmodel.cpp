#include "qwallach/flagmodel.hpp"

#include <algorithm>
#include <sstream>

#include "qwallach/hecke.hpp"
#include "qwallach/spectral.hpp"

namespace qwallach {

namespace {

BigInt power(std::uint32_t base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

std::optional<Perm> first_difference(const OrbitFn& a, const OrbitFn& b) {
  std::map<Perm, bool> keys;
  for (const auto& [w, v] : a.values()) keys[w] = true;
  for (const auto& [w, v] : b.values()) keys[w] = true;
  for (const auto& [w, unused] : keys) {
    if (a.value(w) != b.value(w)) return w;
  }
  return std::nullopt;
}

std::string mismatch_details(const OrbitFn& lhs, const OrbitFn& rhs) {
  auto w = first_difference(lhs, rhs);
  if (!w) return {};
  return "orbit " + w->to_string() + ": lhs " + lhs.value(*w).get_str() + ", rhs " +
         rhs.value(*w).get_str();
}

Check make_check(std::string name, const FlagModel& m, std::map<std::string, std::int64_t> extra = {}) {
  Check c;
  c.name = std::move(name);
  c.params = std::move(extra);
  c.params["n"] = m.n();
  c.params["q"] = m.q();
  return c;
}

void compare_into(Check& c, const OrbitFn& lhs, const OrbitFn& rhs) {
  c.pass = lhs == rhs;
  if (!c.pass) c.details = mismatch_details(lhs, rhs);
}

}  // namespace

BigInt OrbitFn::value(const Perm& orbit) const {
  auto it = values_.find(orbit);
  return it == values_.end() ? BigInt(0) : it->second;
}

void OrbitFn::add(const Perm& orbit, const BigInt& v) {
  if (orbit.size() != n_) throw std::invalid_argument("OrbitFn: orbit label of wrong size");
  if (sgn(v) == 0) return;
  auto [it, inserted] = values_.try_emplace(orbit, v);
  if (!inserted) {
    it->second += v;
    if (sgn(it->second) == 0) values_.erase(it);
  }
}

void OrbitFn::check_compatible(const OrbitFn& rhs) const {
  if (n_ != rhs.n_ || q_ != rhs.q_) throw std::invalid_argument("OrbitFn: (n,q) mismatch");
}

OrbitFn& OrbitFn::operator+=(const OrbitFn& rhs) {
  check_compatible(rhs);
  for (const auto& [w, v] : rhs.values_) add(w, v);
  return *this;
}

OrbitFn& OrbitFn::operator-=(const OrbitFn& rhs) {
  check_compatible(rhs);
  for (const auto& [w, v] : rhs.values_) add(w, -v);
  return *this;
}

OrbitFn operator*(const BigInt& c, const OrbitFn& f) {
  OrbitFn r(f.n_, f.q_);
  for (const auto& [w, v] : f.values_) r.add(w, c * v);
  return r;
}

std::string OrbitFn::to_string() const {
  if (values_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, v] : values_) {
    if (!first) out << " + ";
    first = false;
    out << v.get_str() << "*e_" << w.to_string();
  }
  return out.str();
}

FlagModel::FlagModel(int n, std::uint32_t q, FlagModelOptions options)
    : n_(n), q_(q), options_(options), rng_(options.seed) {
  if (n < 1) throw std::invalid_argument("FlagModel: n must be positive");
  flags_ = enumerate_flags(n, q, options_.budget);
  orbits_ = enumerate_perms(n);

  const Flag standard = Flag::standard(n, q);
  reps_.reserve(orbits_.size());
  for (const auto& x : orbits_) {
    // The flag with basis e_{s(1)}, ..., e_{s(n)} sits at position s^{-1}
    // relative to the standard flag.
    const Perm s = options_.convention == OrbitConvention::natural ? x.inverse() : x;
    FqMatrix b(static_cast<std::size_t>(n), static_cast<std::size_t>(n), q);
    for (int k = 1; k <= n; ++k) b(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(s(k) - 1)) = 1;
    Flag v = Flag::from_basis(b);
    if (label(standard, v) != x) {
      throw std::logic_error("FlagModel: representative does not realize orbit " + x.to_string());
    }
    reps_.emplace_back(standard, std::move(v));
  }

  const std::size_t orbit_count = orbits_.size();
  std::vector<std::uint32_t> from_standard(flags_.size());
  const bool transpose = options_.convention == OrbitConvention::transpose;
  auto oriented = [transpose](const Perm& p) { return transpose ? p.inverse() : p; };
  for (std::size_t f = 0; f < flags_.size(); ++f) {
    from_standard[f] = static_cast<std::uint32_t>(
        lex_rank(oriented(position_from_coordinates(flags_[f].coordinate_map()))));
  }
  table_.assign(orbit_count, {});
  std::vector<std::uint64_t> counts(orbit_count * orbit_count);
  for (std::size_t z = 0; z < orbit_count; ++z) {
    std::fill(counts.begin(), counts.end(), 0);
    const FqMatrix& to_v = reps_[z].second.coordinate_map();
    for (std::size_t f = 0; f < flags_.size(); ++f) {
      const std::size_t y =
          lex_rank(oriented(position_from_coordinates(flags_[f].adapted_basis() * to_v)));
      ++counts[from_standard[f] * orbit_count + y];
    }
    for (std::size_t x = 0; x < orbit_count; ++x) {
      for (std::size_t y = 0; y < orbit_count; ++y) {
        if (auto c = counts[x * orbit_count + y]) {
          table_[x].push_back({static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(z), c});
        }
      }
    }
  }
}

Perm FlagModel::label(const Flag& W, const Flag& V) const {
  const Perm p = relative_position(W, V);
  return options_.convention == OrbitConvention::natural ? p : p.inverse();
}

const std::pair<Flag, Flag>& FlagModel::representative(const Perm& orbit) const {
  if (orbit.size() != n_) throw std::invalid_argument("FlagModel: orbit label of wrong size");
  return reps_[lex_rank(orbit)];
}

FqMatrix FlagModel::random_invertible() const {
  const auto dim = static_cast<std::size_t>(n_);
  std::uniform_int_distribution<std::uint32_t> entry(0, q_ - 1);
  for (;;) {
    FqMatrix g(dim, dim, q_);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) g(r, c) = entry(rng_);
    }
    if (rank(g) == dim) return g;
  }
}

std::pair<Flag, Flag> FlagModel::translated_representative(const Perm& orbit) const {
  const auto& [w, v] = representative(orbit);
  const FqMatrix g = random_invertible();
  return {act(g, w), act(g, v)};
}

OrbitFn FlagModel::unit() const { return basis(Perm::identity(n_)); }

OrbitFn FlagModel::basis(const Perm& orbit) const {
  OrbitFn f(n_, q_);
  f.add(orbit, 1);
  return f;
}

OrbitFn FlagModel::indicator(const std::function<bool(const Flag&, const Flag&)>& pred) const {
  OrbitFn f(n_, q_);
  for (std::size_t z = 0; z < orbits_.size(); ++z) {
    const bool v = pred(reps_[z].first, reps_[z].second);
    if (options_.debug_orbit_checks) {
      auto [w2, v2] = translated_representative(orbits_[z]);
      if (pred(w2, v2) != v) {
        throw OrbitConstancyError("indicator is not constant on orbit " + orbits_[z].to_string());
      }
    }
    if (v) f.add(orbits_[z], 1);
  }
  return f;
}

OrbitFn FlagModel::f1() const { return indicator(f1_holds); }

OrbitFn FlagModel::f_t(int t) const {
  if (t < 0) throw std::invalid_argument("f_t: t must be nonnegative");
  if (t > n_) return zero();
  return indicator([t](const Flag& a, const Flag& b) { return in_X_t(a, b, t); });
}

void FlagModel::check_same_model(const OrbitFn& f) const {
  if (f.n() != n_ || f.q() != q_) throw std::invalid_argument("FlagModel: function from another (n,q)");
}

std::vector<BigInt> FlagModel::dense(const OrbitFn& f) const {
  check_same_model(f);
  std::vector<BigInt> d(orbits_.size());
  for (const auto& [w, v] : f.values()) d[lex_rank(w)] = v;
  return d;
}

OrbitFn FlagModel::convolve(const OrbitFn& f, const OrbitFn& g) const {
  const auto fd = dense(f);
  const auto gd = dense(g);
  std::vector<BigInt> out(orbits_.size());
  BigInt term;
  for (std::size_t x = 0; x < orbits_.size(); ++x) {
    if (sgn(fd[x]) == 0) continue;
    for (const auto& e : table_[x]) {
      if (sgn(gd[e.y]) == 0) continue;
      term = fd[x] * gd[e.y];
      mpz_addmul_ui(out[e.z].get_mpz_t(), term.get_mpz_t(), e.count);
    }
  }
  OrbitFn h(n_, q_);
  for (std::size_t z = 0; z < orbits_.size(); ++z) h.add(orbits_[z], out[z]);

  if (options_.debug_orbit_checks) {
    for (std::size_t z = 0; z < orbits_.size(); ++z) {
      auto [w2, v2] = translated_representative(orbits_[z]);
      if (convolve_at(f, g, w2, v2) != out[z]) {
        throw OrbitConstancyError("convolution is not constant on orbit " + orbits_[z].to_string());
      }
    }
  }
  return h;
}

BigInt FlagModel::convolve_at(const OrbitFn& f, const OrbitFn& g, const Flag& W, const Flag& V) const {
  check_same_model(f);
  check_same_model(g);
  BigInt total = 0;
  for (const auto& mid : flags_) {
    BigInt a = f.value(label(W, mid));
    if (sgn(a) == 0) continue;
    total += a * g.value(label(mid, V));
  }
  return total;
}

std::uint64_t FlagModel::structure_constant(const Perm& x, const Perm& y, const Perm& z) const {
  const auto yi = lex_rank(y);
  const auto zi = lex_rank(z);
  for (const auto& e : table_[lex_rank(x)]) {
    if (e.y == yi && e.z == zi) return e.count;
  }
  return 0;
}

bool f1_holds(const Flag& W, const Flag& Vp) {
  const int n = W.n();
  for (int g = 1; g <= n; ++g) {
    bool ok = true;
    for (int r = 1; r < g && ok; ++r) ok = W.step(r) == Vp.step(r);
    for (int r = g; r <= n - 1 && ok; ++r) {
      ok = !(Vp.step(r) == W.step(r)) && Vp.step(r + 1).contains(W.step(r));
    }
    if (ok) return true;
  }
  return false;
}

bool in_X_t(const Flag& A, const Flag& B, int t) {
  if (t < 0) throw std::invalid_argument("in_X_t: t must be nonnegative");
  const int n = A.n();
  int prev = 0;
  for (int r = 1; r <= n - t; ++r) {
    int m = r;  // A_r cannot fit in a smaller B_i
    while (!B.step(m).contains(A.step(r))) ++m;
    if (m <= prev) return false;
    prev = m;
  }
  return true;
}

std::vector<Check> verify_lemma3(const FlagModel& model, int t_lo, int t_hi) {
  std::vector<Check> checks;
  const OrbitFn f1 = model.f1();
  std::optional<OrbitFn> next;
  for (int t = std::max(t_lo, 0); t <= t_hi; ++t) {
    const OrbitFn ft = next ? *next : model.f_t(t);
    next = model.f_t(t + 1);
    const OrbitFn lhs = model.convolve(f1, ft);
    const OrbitFn rhs = q_int(static_cast<unsigned>(t)).eval(model.q()) * ft +
                        power(model.q(), static_cast<unsigned long>(t)) * *next;
    Check c = make_check("lemma3", model, {{"t", t}});
    compare_into(c, lhs, rhs);
    checks.push_back(std::move(c));
  }
  return checks;
}

std::vector<Check> verify_lemma3(const FlagModel& model) {
  return verify_lemma3(model, 1, model.n() + 2);
}

std::vector<Check> verify_factorization(const FlagModel& model, int t_lo, int t_hi) {
  const int n = model.n();
  const auto q = model.q();
  std::vector<Check> checks;
  const OrbitFn f1 = model.f1();
  const OrbitFn one = model.unit();
  auto shifted = [&](unsigned k) { return f1 - q_int(k).eval(q) * one; };

  t_lo = std::max(t_lo, 1);
  t_hi = std::min(t_hi, n - 1);
  OrbitFn product = f1;
  for (int t = 1; t <= t_hi; ++t) {
    if (t >= 2) product = model.convolve(product, shifted(static_cast<unsigned>(t - 1)));
    if (t < t_lo) continue;
    const OrbitFn lhs = power(q, static_cast<unsigned long>(t) * (t - 1) / 2) * model.f_t(t);
    Check c = make_check("factorization", model, {{"t", t}});
    compare_into(c, lhs, product);
    checks.push_back(std::move(c));
  }

  Check collapse = make_check("collapse", model, {{"t", n - 1}});
  compare_into(collapse, model.f_t(n - 1), model.f_t(n));
  checks.push_back(std::move(collapse));

  OrbitFn full = f1;
  for (unsigned k : wallach_factor_ks(n)) {
    if (k == 0) continue;
    full = model.convolve(full, shifted(k));
  }
  Check vanish = make_check("vanishing-product", model);
  vanish.pass = full.is_zero();
  if (!vanish.pass) vanish.details = "nonzero on " + std::to_string(full.values().size()) + " orbits";
  checks.push_back(std::move(vanish));
  return checks;
}

std::vector<Check> verify_factorization(const FlagModel& model) {
  return verify_factorization(model, 1, model.n() - 1);
}

std::vector<Check> verify_span_commutativity(const FlagModel& model) {
  const int n = model.n();
  const auto q = model.q();
  const auto count = static_cast<std::size_t>(n) + 1;
  std::vector<Check> checks;

  std::vector<OrbitFn> ft;
  for (int t = 0; t <= n; ++t) ft.push_back(model.f_t(t));
  const OrbitFn f1 = ft[1];
  std::vector<OrbitFn> powers{model.unit()};
  for (int t = 1; t <= n; ++t) powers.push_back(model.convolve(powers.back(), f1));

  // f_1^t = sum_s coeff[t][s] f_s, expanded with the product rule
  // f_1 * f_s = [s]_q f_s + q^s f_{s+1} (f_{n+1} = 0).
  std::vector<std::vector<BigInt>> coeff(count, std::vector<BigInt>(count));
  coeff[0][0] = 1;
  for (std::size_t t = 1; t < count; ++t) {
    for (std::size_t s = 0; s < count; ++s) {
      const BigInt& c = coeff[t - 1][s];
      if (sgn(c) == 0) continue;
      coeff[t][s] += c * q_int(static_cast<unsigned>(s)).eval(q);
      if (s + 1 < count) coeff[t][s + 1] += c * power(q, s);
    }
  }
  Check tri = make_check("span-triangular", model);
  tri.pass = true;
  for (std::size_t t = 0; t < count && tri.pass; ++t) {
    OrbitFn combo = model.zero();
    for (std::size_t s = 0; s <= t; ++s) combo += coeff[t][s] * ft[s];
    for (std::size_t s = t + 1; s < count; ++s) {
      if (sgn(coeff[t][s]) != 0) tri.pass = false;
    }
    if (coeff[t][t] != power(q, t * (t == 0 ? 0 : t - 1) / 2)) tri.pass = false;
    if (combo != powers[t]) {
      tri.pass = false;
      tri.details = "f_1^" + std::to_string(t) + ": " + mismatch_details(combo, powers[t]);
    } else if (!tri.pass) {
      tri.details = "unexpected change-of-basis coefficients at t = " + std::to_string(t);
    }
  }
  checks.push_back(std::move(tri));

  auto rank_of = [&](const std::vector<const OrbitFn*>& fns) {
    IntMatrix m(fns.size(), model.orbits().size());
    for (std::size_t r = 0; r < fns.size(); ++r) {
      for (const auto& [w, v] : fns[r]->values()) m(r, lex_rank(w)) = v;
    }
    return rank(m);
  };
  std::vector<const OrbitFn*> a, b, both;
  for (const auto& f : ft) a.push_back(&f);
  for (const auto& f : powers) b.push_back(&f);
  both = a;
  both.insert(both.end(), b.begin(), b.end());
  const auto ra = rank_of(a), rb = rank_of(b), rab = rank_of(both);
  Check span = make_check("span-rank", model,
                          {{"rank_f_t", static_cast<std::int64_t>(ra)},
                           {"rank_f1_powers", static_cast<std::int64_t>(rb)},
                           {"rank_union", static_cast<std::int64_t>(rab)}});
  span.pass = ra == rb && rb == rab && ra == static_cast<std::size_t>(n);
  checks.push_back(std::move(span));

  Check comm = make_check("commutativity", model);
  comm.pass = true;
  for (std::size_t s = 0; s < count && comm.pass; ++s) {
    for (std::size_t t = s + 1; t < count && comm.pass; ++t) {
      const OrbitFn st = model.convolve(ft[s], ft[t]);
      const OrbitFn ts = model.convolve(ft[t], ft[s]);
      if (st != ts) {
        comm.pass = false;
        comm.details = "f_" + std::to_string(s) + " * f_" + std::to_string(t) + ": " +
                       mismatch_details(st, ts);
      }
    }
  }
  checks.push_back(std::move(comm));
  return checks;
}

std::vector<Check> compare_structure_constants(const FlagModel& model) {
  const int n = model.n();
  const BigInt q0 = model.q();
  std::vector<Check> checks;

  Check table = make_check("structure-constants", model);
  table.pass = true;
  std::size_t mismatches = 0;
  for (const auto& x : model.orbits()) {
    for (const auto& y : model.orbits()) {
      const OrbitFn conv = model.convolve(model.basis(x), model.basis(y));
      const GroupElt hecke = specialize(mul(HeckeElt::basis(x), HeckeElt::basis(y)), q0);
      if (conv.values() != hecke) {
        if (mismatches++ == 0) {
          table.details = "e_" + x.to_string() + " * e_" + y.to_string() + " = " + conv.to_string() +
                          " but T_x T_y at q gives " + to_string(hecke);
        }
        table.pass = false;
      }
    }
  }
  table.params["pairs"] = static_cast<std::int64_t>(model.orbits().size() * model.orbits().size());
  table.params["mismatches"] = static_cast<std::int64_t>(mismatches);
  if (table.pass) table.details = "orbit convention: " + describe(model.convention());
  checks.push_back(std::move(table));

  const OrbitFn f1 = model.f1();
  Check tau_check = make_check("tau-f1", model);
  const GroupElt t = specialize(tau(n), q0);
  tau_check.pass = f1.values() == t;
  if (!tau_check.pass) tau_check.details = "f1 = " + f1.to_string() + ", tau(q) = " + to_string(t);
  checks.push_back(std::move(tau_check));

  Check reversed = make_check("reversed-tau-f1", model);
  const GroupElt rt = specialize(reversed_tau(n), q0);
  reversed.pass = f1.values() == rt;
  if (!reversed.pass) reversed.details = "f1 = " + f1.to_string() + ", reversed tau(q) = " + to_string(rt);
  checks.push_back(std::move(reversed));
  return checks;
}

HeckeElt reversed_tau(int n) {
  HeckeElt t(n);
  for (int g = 1; g <= n; ++g) t.add_term(cycle_element(n, g).inverse(), Poly(1));
  return t;
}

MatchingSearch search_orbit_matchings(const FlagModel& model) {
  const int n = model.n();
  if (n > 3) throw std::invalid_argument("search_orbit_matchings: n! ! bijections is out of reach for n > 3");
  const auto& orbits = model.orbits();
  const std::size_t size = orbits.size();
  const BigInt q0 = model.q();

  // Dense structure constants of both algebras: conv[x][y][z], hecke[x][y][z].
  using Table = std::vector<std::vector<std::vector<BigInt>>>;
  Table conv(size, std::vector<std::vector<BigInt>>(size, std::vector<BigInt>(size)));
  Table hecke = conv;
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      const OrbitFn c = model.convolve(model.basis(orbits[x]), model.basis(orbits[y]));
      for (const auto& [w, v] : c.values()) {
        conv[x][y][lex_rank(w)] = v;
      }
      const auto prod = specialize(mul(HeckeElt::basis(orbits[x]), HeckeElt::basis(orbits[y])), q0);
      for (const auto& [w, v] : prod) hecke[x][y][lex_rank(w)] = v;
    }
  }
  std::vector<BigInt> f1(size), t(size);
  const OrbitFn f1_fn = model.f1();
  for (const auto& [w, v] : f1_fn.values()) f1[lex_rank(w)] = v;
  for (const auto& [w, v] : specialize(tau(n), q0)) t[lex_rank(w)] = v;

  MatchingSearch result;
  std::vector<std::size_t> phi(size);
  for (std::size_t i = 0; i < size; ++i) phi[i] = i;
  do {
    bool ok = true;
    for (std::size_t x = 0; x < size && ok; ++x) {
      for (std::size_t y = 0; y < size && ok; ++y) {
        for (std::size_t z = 0; z < size && ok; ++z) ok = conv[x][y][z] == hecke[phi[x]][phi[y]][phi[z]];
      }
    }
    if (!ok) continue;
    ++result.structure_preserving;
    bool tau_ok = true;
    for (std::size_t x = 0; x < size && tau_ok; ++x) tau_ok = f1[x] == t[phi[x]];
    if (tau_ok) ++result.also_matching_tau;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return result;
}

std::string describe(OrbitConvention convention) {
  if (convention == OrbitConvention::natural) {
    return "natural: label(W,V) = w with w(i) = j where dim(W_i n V_j) jumps";
  }
  return "transpose: label(W,V) = w with w(j) = i where dim(W_i n V_j) jumps";
}

}  // namespace qwallach
