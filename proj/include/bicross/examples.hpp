#pragma once

// Concrete bicrossed-product datasets: the bilinear family on (Z/p)^2 with
// trivial actions, the GF(p^2) x| Z/q family with its diagonal realization,
// cyclic direct products with carry cocycles (and the Kashina presets), the
// S3 factorization, and gamma-recursion realizations for cyclic F.

#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicross/bicrossed.hpp"
#include "bicross/braiding.hpp"
#include "bicross/cocycles.hpp"
#include "bicross/matched_pair.hpp"
#include "bicross/realization.hpp"
#include "bicross/report.hpp"

namespace bicross {

// ---------------------------------------------------------------------------
// Small modular arithmetic helpers.

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline long long pow_mod(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
  }
  return r;
}

inline long long mult_order_mod(long long v, long long p) {
  long long cur = v % p, k = 1;
  while (cur != 1) {
    cur = cur * v % p;
    if (++k > p) throw Error(ErrorCode::BadParameters, witness("unit", v, "mod", p));
  }
  return k;
}

// nu-number [x]_nu = 1 + nu + ... + nu^{x-1} mod p, with [0]_nu = 0.
// Addition law (exercised by tests): [x+y]_nu = [x]_nu + nu^x [y]_nu.
inline int q_number(long long nu, long long x, long long p) {
  long long acc = 0, pw = 1;
  for (long long k = 0; k < x; ++k) {
    acc = (acc + pw) % p;
    pw = pw * nu % p;
  }
  return static_cast<int>(acc);
}

// ---------------------------------------------------------------------------
// GF(p^2) = F_p[a] with a^2 = c, c the least quadratic nonresidue mod p.
// The element j + l*a is stored as the index j*p + l, which matches both
// direct_product(Z/p, Z/p) and AbelianGroup({p,p}) coordinates.

struct GaloisField {
  int p = 0;
  int c = 0;  // a^2 = c

  explicit GaloisField(int prime) : p(prime) {
    if (p < 3 || !is_prime(p))
      throw Error(ErrorCode::BadParameters, witness("p", p));
    for (int v = 2; v < p; ++v)
      if (pow_mod(v, (p - 1) / 2, p) == p - 1) {
        c = v;
        break;
      }
  }

  int n() const { return p * p; }
  int j_of(int u) const { return u / p; }
  int l_of(int u) const { return u % p; }
  int idx(long long j, long long l) const {
    j %= p;
    if (j < 0) j += p;
    l %= p;
    if (l < 0) l += p;
    return static_cast<int>(j * p + l);
  }

  int zero() const { return 0; }
  int one() const { return idx(1, 0); }
  int gen_a() const { return idx(0, 1); }

  int add(int u, int v) const { return idx(j_of(u) + j_of(v), l_of(u) + l_of(v)); }
  int neg(int u) const { return idx(-j_of(u), -l_of(u)); }
  int sub(int u, int v) const { return add(u, neg(v)); }
  int scal(long long s, int u) const { return idx(s % p * j_of(u), s % p * l_of(u)); }

  int mul(int u, int v) const {
    long long j = j_of(u), l = l_of(u), jj = j_of(v), ll = l_of(v);
    return idx(j * jj + static_cast<long long>(c) * l % p * ll, j * ll + l * jj);
  }
  int pow(int u, long long e) const {
    int r = one(), b = u;
    for (; e > 0; e >>= 1) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
    }
    return r;
  }
  int inv(int u) const {
    long long j = j_of(u), l = l_of(u);
    long long norm = ((j * j - static_cast<long long>(c) * l % p * l) % p + p) % p;
    if (norm == 0) throw Error(ErrorCode::BadParameters, witness("element", u));
    long long ninv = pow_mod(norm, p - 2, p);
    return idx(j * ninv, -l % p * ninv);
  }

  int frobenius(int u) const { return pow(u, p); }
  // tr(j + la) = 2j; equals u + u^p because a^p = -a for a nonresidue square.
  int trace(int u) const { return static_cast<int>(2LL * j_of(u) % p); }
  // Coefficient pairing det_a(j+la, j'+l'a) = j*l' - l*j' (alternating bilinear).
  int det_a(int u, int v) const {
    long long d = (static_cast<long long>(j_of(u)) * l_of(v) -
                   static_cast<long long>(l_of(u)) * j_of(v)) %
                  p;
    return static_cast<int>(d < 0 ? d + p : d);
  }

  FiniteGroup additive_group() const {
    return direct_product(cyclic_group(p), cyclic_group(p));
  }
  AbelianGroup additive_abelian() const { return AbelianGroup(std::vector<int>{p, p}); }
};

// ---------------------------------------------------------------------------
// A fully specified dataset: matched pair, cocycles, the braiding the family
// is expected to produce (in closed form), and, when the construction comes
// with one, a diagonal realization.

struct ExampleDataset {
  std::string name;
  MatchedPair mp;
  SigmaTable sigma;
  TauTable tau;
  BraidingTable q_closed;
  std::optional<DiagonalRealization> dr;
};

// ---------------------------------------------------------------------------
// Bilinear family on G = F = (Z/p)^2 with both actions trivial:
//   sigma_{(A,B)}((x,y),(x',y')) = zeta_p^{(a A^2 + b B^2)(x y' - x' y)}
//   tau_{(x,y)}((A,B),(A',B'))   = zeta_p^{(x+y)(A B' - A' B)}
//   Q^{(x,y),(x',y')}_{(A,B),(A',B')} = zeta_p^{2(a A A' + b B B')(x y' - x' y)}
// Defined for p an odd prime and a*b invertible mod p.

inline ExampleDataset trivial_actions_example(int p, int a, int b) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::BadParameters, witness("p", p));
  a %= p;
  if (a < 0) a += p;
  b %= p;
  if (b < 0) b += p;
  if (a == 0 || b == 0)
    throw Error(ErrorCode::BadParameters, witness("a", a, "b", b, "mod", p));

  ExampleDataset d;
  d.name = "trivial-actions";
  FiniteGroup zp2 = direct_product(cyclic_group(p), cyclic_group(p));
  d.mp = trivial_actions_pair(zp2, zp2);
  const int n = p * p;
  d.sigma = SigmaTable::trivial(n, n, p);
  d.tau = TauTable::trivial(n, n, p);
  d.q_closed = BraidingTable::trivial(n, n, p);
  auto c1 = [p](int v) { return v / p; };
  auto c2 = [p](int v) { return v % p; };
  auto det = [&](int u, int v) {
    return static_cast<long long>(c1(u)) * c2(v) - static_cast<long long>(c1(v)) * c2(u);
  };
  for (int g = 0; g < n; ++g) {
    long long quad = (static_cast<long long>(a) * c1(g) * c1(g) +
                      static_cast<long long>(b) * c2(g) * c2(g)) %
                     p;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) d.sigma.set(g, x, y, quad * det(x, y));
  }
  for (int x = 0; x < n; ++x) {
    long long sum = c1(x) + c2(x);
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) d.tau.set(x, g, h, sum * det(g, h));
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      long long bil = (2LL * a * c1(g) * c1(h) + 2LL * b * c2(g) * c2(h)) % p;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) d.q_closed.set(g, h, x, y, bil * det(x, y));
    }
  return d;
}

// When both actions are trivial the braiding splits into the deficiencies of
// g -> sigma_g and x -> tau_x from being homomorphisms:
//   Q^{x,y}_{g,h} = [sigma_{hg} sigma_h^{-1} sigma_g^{-1}](x,y)
//                 * [tau_{xy} tau_x^{-1} tau_y^{-1}](h,g).
// tau_part == 0 everywhere iff x -> tau_x is a homomorphism.

struct TrivialActionSplit {
  BraidingTable sigma_part;
  BraidingTable tau_part;
};

inline TrivialActionSplit trivial_action_split(const MatchedPair& mp,
                                               const SigmaTable& s, const TauTable& t) {
  if (!mp.lact_trivial() || !mp.ract_trivial())
    throw Error(ErrorCode::BadParameters, "actions are not both trivial");
  if (s.conductor != t.conductor)
    throw Error(ErrorCode::ConductorMismatch, witness("sigma", s.conductor, "tau", t.conductor));
  const int nG = mp.nG(), nF = mp.nF();
  TrivialActionSplit out{BraidingTable::trivial(nG, nF, s.conductor),
                         BraidingTable::trivial(nG, nF, s.conductor)};
  for (int g = 0; g < nG; ++g)
    for (int h = 0; h < nG; ++h)
      for (int x = 0; x < nF; ++x)
        for (int y = 0; y < nF; ++y) {
          out.sigma_part.set(g, h, x, y,
                             static_cast<long long>(s.exp(mp.G.mul(h, g), x, y)) -
                                 s.exp(h, x, y) - s.exp(g, x, y));
          out.tau_part.set(g, h, x, y,
                           static_cast<long long>(t.exp(mp.F.mul(x, y), h, g)) -
                               t.exp(x, h, g) - t.exp(y, h, g));
        }
  return out;
}

// ---------------------------------------------------------------------------
// The GF(p^2) family: G = (K,+) for K = GF(p^2), F = Z/q for a prime q with
// q | p-1, g <| x = nu^x g for a fixed unit nu of order q, |> trivial.

struct FiniteFieldPair {
  GaloisField K;
  int q = 0;
  int nu = 0;
  MatchedPair mp;
};

inline FiniteFieldPair finite_field_pair(int p, int q) {
  if (q < 2 || !is_prime(q)) throw Error(ErrorCode::BadParameters, witness("q", q));
  GaloisField K(p);
  if ((p - 1) % q != 0) throw Error(ErrorCode::NoOrderQUnit, witness("p", p, "q", q));
  int nu = 0;
  for (int v = 2; v < p; ++v)
    if (mult_order_mod(v, p) == q) {
      nu = v;
      break;
    }
  if (nu == 0) throw Error(ErrorCode::NoOrderQUnit, witness("p", p, "q", q));

  FiniteFieldPair out{K, q, nu, MatchedPair{}};
  out.mp.F = cyclic_group(q);
  out.mp.G = K.additive_group();
  out.mp.lact.assign(static_cast<size_t>(K.n()) * q, 0);
  out.mp.ract.assign(static_cast<size_t>(K.n()) * q, 0);
  for (int g = 0; g < K.n(); ++g)
    for (int x = 0; x < q; ++x) {
      out.mp.lact[g * q + x] = x;  // |> trivial
      out.mp.ract[g * q + x] = K.scal(pow_mod(nu, x, p), g);
    }
  validate_matched_pair(out.mp).require();
  return out;
}

// All maps alpha: Z/q -> (K,+) with alpha(0) = 0 and
// alpha(x+y) = alpha(x) + nu^x alpha(y). A candidate is determined by
// alpha(1); the full law, including wraparound at q, is then rechecked.
// The result is exactly {r*[.]_nu : r in K} (tested).
inline std::vector<std::vector<int>> enumerate_alpha(const FiniteFieldPair& fp) {
  const GaloisField& K = fp.K;
  const int q = fp.q, p = K.p;
  std::vector<std::vector<int>> out;
  for (int r = 0; r < K.n(); ++r) {
    std::vector<int> alpha(q, 0);
    for (int x = 0; x + 1 < q; ++x)
      alpha[x + 1] = K.add(alpha[x], K.scal(pow_mod(fp.nu, x, p), r));
    bool ok = true;
    for (int x = 0; x < q && ok; ++x)
      for (int y = 0; y < q && ok; ++y)
        ok = alpha[(x + y) % q] ==
             K.add(alpha[x], K.scal(pow_mod(fp.nu, x, p), alpha[y]));
    if (ok) out.push_back(std::move(alpha));
  }
  return out;
}

inline std::vector<std::vector<int>> enumerate_alpha(int p, int q) {
  return enumerate_alpha(finite_field_pair(p, q));
}

// The dim p^2 q family over GF(p^2), with its realization over C = (K,+):
//   sigma_g(x,y) = zeta_p^{tr(g^2) nu^x [x]_nu [y]_nu}
//   tau_x(g,h)   = zeta_p^{r [x]_{nu^2} det_a(g,h)}      (default r = 1)
//   z(g,x)       = [x]_nu g
//   <chi(g,x), h> = zeta_p^{2 tr(h g) [x]_nu}
// and the braiding the construction aims for:
//   Q^{x,y}_{g,h} = zeta_p^{2 tr(h g) [x]_nu [y]_nu}.
// The biproduct R # kC then has dimension p^4 q.

struct P4qExample {
  FiniteFieldPair pair;
  long long r = 1;
  ExampleDataset ds;
};

inline P4qExample p4q_example(int p, int q, long long r = 1) {
  P4qExample ex{finite_field_pair(p, q), r, ExampleDataset{}};
  const GaloisField& K = ex.pair.K;
  const int nu = ex.pair.nu, nG = K.n(), nF = q;
  r %= p;
  if (r < 0) r += p;
  ex.r = r;

  ExampleDataset& d = ex.ds;
  d.name = "p4q";
  d.mp = ex.pair.mp;
  d.sigma = SigmaTable::trivial(nG, nF, p);
  d.tau = TauTable::trivial(nF, nG, p);
  d.q_closed = BraidingTable::trivial(nG, nF, p);

  std::vector<int> qn(nF), qn2(nF), nupow(nF);
  const int nu2 = static_cast<int>(static_cast<long long>(nu) * nu % p);
  for (int x = 0; x < nF; ++x) {
    qn[x] = q_number(nu, x, p);
    qn2[x] = q_number(nu2, x, p);
    nupow[x] = static_cast<int>(pow_mod(nu, x, p));
  }
  for (int g = 0; g < nG; ++g) {
    const long long t2 = K.trace(K.mul(g, g));
    for (int x = 0; x < nF; ++x)
      for (int y = 0; y < nF; ++y)
        d.sigma.set(g, x, y, t2 * nupow[x] % p * qn[x] % p * qn[y]);
  }
  for (int x = 0; x < nF; ++x)
    for (int g = 0; g < nG; ++g)
      for (int h = 0; h < nG; ++h)
        d.tau.set(x, g, h, r * qn2[x] % p * K.det_a(g, h));
  for (int g = 0; g < nG; ++g)
    for (int h = 0; h < nG; ++h) {
      const long long tr2 = 2LL * K.trace(K.mul(h, g)) % p;
      for (int x = 0; x < nF; ++x)
        for (int y = 0; y < nF; ++y)
          d.q_closed.set(g, h, x, y, tr2 * qn[x] % p * qn[y]);
    }

  DiagonalRealization dr;
  dr.C = K.additive_abelian();
  dr.conductor = p;
  dr.nG = nG;
  dr.nF = nF;
  dr.z.assign(static_cast<size_t>(nG) * nF, 0);
  dr.chi.assign(static_cast<size_t>(nG) * nF, Character::trivial(dr.C, p));
  for (int g = 0; g < nG; ++g)
    for (int x = 0; x < nF; ++x) {
      dr.z[dr.at(g, x)] = K.scal(qn[x], g);
      // <chi(g,x), j+la> = 2 tr((j+la) g) [x]_nu = j*2tr(g)[x] + l*2tr(ag)[x]
      int e0 = static_cast<int>(2LL * K.trace(g) % p * qn[x] % p);
      int e1 = static_cast<int>(2LL * K.trace(K.mul(K.gen_a(), g)) % p * qn[x] % p);
      dr.chi[dr.at(g, x)] = Character::make(dr.C, p, {e0, e1});
    }
  d.dr = std::move(dr);
  return ex;
}

// ---------------------------------------------------------------------------
// Cyclic direct products: F = <a> of order N, G = <b> of order M, trivial
// actions, conductor MN. With d = gcd(M,N), zeta = zeta_MN^{MN/d}, and
// omega = zeta_MN^w, mu = zeta_MN^m:
//   sigma_{b^s}(a^j, a^h) = omega^{N c s}     (j + h = N c + rem)
//   tau_{a^m}(b^s, b^t)   = zeta^{s t m(m-1)/2} mu^{M c' m}   (s + t = M c' + rem)
//   Q^{a^j, a^h}_{b^s, b^t} = zeta^{s t j h}
// Requires gcd(M,N) | N(N-1)/2.

inline ExampleDataset cyclic_example(int N, int M, long long w, long long m) {
  if (N < 1 || M < 1 || N * static_cast<long long>(M) > 4096)
    throw Error(ErrorCode::BadParameters, witness("N", N, "M", M));
  const long long d = std::gcd(static_cast<long long>(M), static_cast<long long>(N));
  if ((static_cast<long long>(N) * (N - 1) / 2) % d != 0)
    throw Error(ErrorCode::BadParameters,
                witness("gcd", d, "N(N-1)/2", static_cast<long long>(N) * (N - 1) / 2));
  const int cond = M * N;
  w %= cond;
  if (w < 0) w += cond;
  m %= cond;
  if (m < 0) m += cond;

  ExampleDataset ds;
  ds.name = "cyclic";
  ds.mp = trivial_actions_pair(cyclic_group(M), cyclic_group(N));
  ds.sigma = SigmaTable::trivial(M, N, cond);
  ds.tau = TauTable::trivial(N, M, cond);
  ds.q_closed = BraidingTable::trivial(M, N, cond);
  const long long zeta = cond / d;
  for (int s = 0; s < M; ++s)
    for (int j = 0; j < N; ++j)
      for (int h = 0; h < N; ++h)
        ds.sigma.set(s, j, h, w * N % cond * ((j + h) / N) % cond * s);
  for (int x = 0; x < N; ++x) {
    const long long half = static_cast<long long>(x) * (x - 1) / 2;
    for (int s = 0; s < M; ++s)
      for (int t = 0; t < M; ++t)
        ds.tau.set(x, s, t,
                   zeta * (static_cast<long long>(s) * t % cond) % cond * (half % cond) +
                       m * M % cond * ((s + t) / M) % cond * x);
  }
  for (int s = 0; s < M; ++s)
    for (int t = 0; t < M; ++t)
      for (int j = 0; j < N; ++j)
        for (int h = 0; h < N; ++h)
          ds.q_closed.set(s, t, j, h,
                          zeta * (static_cast<long long>(s) * t % cond) % cond *
                              (static_cast<long long>(j) * h % cond));
  return ds;
}

// The gauge nu(b^s, a^j) = omega^{s j} carries the (omega, mu) data to
// (1, omega mu): it strips omega from sigma and folds it into tau.
inline NuTable cyclic_gauge(int N, int M, long long w) {
  NuTable nu = NuTable::trivial(M, N, M * N);
  for (int s = 0; s < M; ++s)
    for (int j = 0; j < N; ++j) nu.set(s, j, w * s % (M * N) * j);
  return nu;
}

// Kashina's Hopf algebras of dimension 2^{n+2}: M = 2, N = 2^n (n >= 2),
// zeta = -1, mu = 1, and omega = 1 (plus family) or omega = zeta_{2N}
// (minus family, omega^N = -1).
inline ExampleDataset kashina_example(int n, bool minus) {
  if (n < 2 || n > 10) throw Error(ErrorCode::BadParameters, witness("n", n));
  ExampleDataset ds = cyclic_example(1 << n, 2, minus ? 1 : 0, 0);
  ds.name = minus ? "kashina-minus" : "kashina-plus";
  return ds;
}

// ---------------------------------------------------------------------------
// S3 = <(01)> * <(012)>: the exact factorization of the symmetric group on
// 3 letters by its transposition and rotation subgroups, with trivial
// cocycles. The induced |> is trivial and <| is conjugation.

inline FiniteGroup symmetric3() {
  static const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  auto find = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    throw Error(ErrorCode::InternalCheck, "permutation lookup");
  };
  std::vector<std::vector<int>> rows(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp{};
      for (int k = 0; k < 3; ++k) comp[k] = perms[i][perms[j][k]];
      rows[i][j] = find(comp);
    }
  return make_group(rows);
}

inline ExampleDataset s3_example(int conductor = 6) {
  FiniteGroup s3 = symmetric3();
  // {0,2} = {id, (01)}; {0,3,4} = {id, (012), (021)} in lexicographic order.
  FactorizationResult fr = from_factorization(s3, {0, 2}, {0, 3, 4});
  ExampleDataset ds;
  ds.name = "s3";
  ds.mp = std::move(fr.mp);
  ds.sigma = SigmaTable::trivial(ds.mp.nG(), ds.mp.nF(), conductor);
  ds.tau = TauTable::trivial(ds.mp.nF(), ds.mp.nG(), conductor);
  ds.q_closed = BraidingTable::trivial(ds.mp.nG(), ds.mp.nF(), conductor);
  return ds;
}

// ---------------------------------------------------------------------------
// Realizations over kC for cyclic F = <a>: a character gamma(g) and a central
// element eta(g) per g in G, extended along the <|-orbit:
//   chi(g, a^i) = gamma(g) gamma(g<|a) ... gamma(g<|a^{i-1}),  z likewise.
// Validity needs, for both gamma and eta:
//   (1) the product over the full orbit g, g<|a, ..., g<|a^{N-1} is trivial;
//   (2) gamma(gh) = gamma(g) ... gamma(g<|a^{k-1}) gamma(h), k = exponent of
//       h |> a.

struct GammaData {
  AbelianGroup C;
  int conductor = 1;
  std::vector<Character> gamma;  // size nG
  std::vector<int> eta;          // size nG, element indices in C
};

namespace detail_gamma {

// F must be cyclic with generator a = element index 1; returns the power
// table pw[i] = index of a^i (and pw.size() = N), used to translate between
// exponents and element indices.
inline std::vector<int> power_table(const MatchedPair& mp) {
  const int N = mp.nF();
  std::vector<int> pw(N);
  std::vector<int> dlog(N, -1);
  int cur = 0;
  for (int i = 0; i < N; ++i) {
    pw[i] = cur;
    if (dlog[cur] != -1)
      throw Error(ErrorCode::BadParameters, witness("|F|", N, "order(a)", i));
    dlog[cur] = i;
    cur = mp.F.mul(cur, 1 % N);
  }
  return pw;
}

inline int add_in(const AbelianGroup& c, int u, int v) {
  return c.index_of(c.add(c.element(u), c.element(v)));
}

}  // namespace detail_gamma

inline ValidationReport validate_gamma(const MatchedPair& mp, const GammaData& gd) {
  ValidationReport rep;
  const std::vector<int> pw = detail_gamma::power_table(mp);
  const int N = mp.nF(), nG = mp.nG();
  std::vector<int> dlog(N, 0);
  for (int i = 0; i < N; ++i) dlog[pw[i]] = i;
  if (static_cast<int>(gd.gamma.size()) != nG || static_cast<int>(gd.eta.size()) != nG) {
    rep.add(ErrorCode::BadParameters, witness("gamma", gd.gamma.size(), "eta", gd.eta.size()));
    return rep;
  }
  const int a = 1 % N;
  for (int g = 0; g < nG; ++g) {
    Character cprod = Character::trivial(gd.C, gd.conductor);
    int eprod = 0;
    int cur = g;
    for (int k = 0; k < N; ++k) {
      cprod = cprod * gd.gamma[cur];
      eprod = detail_gamma::add_in(gd.C, eprod, gd.eta[cur]);
      cur = mp.act_g(cur, a);
    }
    if (!cprod.is_trivial() || eprod != 0)
      rep.add(ErrorCode::GammaConditionFails, witness("condition", 1, "g", g));
  }
  for (int g = 0; g < nG; ++g)
    for (int h = 0; h < nG; ++h) {
      const int k = dlog[mp.act_f(h, a)];  // h |> a = a^k
      Character cprod = gd.gamma[h];
      int eprod = gd.eta[h];
      int cur = g;
      for (int i = 0; i < k; ++i) {
        cprod = cprod * gd.gamma[cur];
        eprod = detail_gamma::add_in(gd.C, eprod, gd.eta[cur]);
        cur = mp.act_g(cur, a);
      }
      const int gh = mp.G.mul(g, h);
      if (!(cprod == gd.gamma[gh]) || eprod != gd.eta[gh])
        rep.add(ErrorCode::GammaConditionFails, witness("condition", 2, "g", g, "h", h));
    }
  return rep;
}

inline DiagonalRealization realize_from_gamma(const MatchedPair& mp, const GammaData& gd) {
  validate_gamma(mp, gd).require();
  const std::vector<int> pw = detail_gamma::power_table(mp);
  const int N = mp.nF(), nG = mp.nG();
  DiagonalRealization dr;
  dr.C = gd.C;
  dr.conductor = gd.conductor;
  dr.nG = nG;
  dr.nF = N;
  dr.z.assign(static_cast<size_t>(nG) * N, 0);
  dr.chi.assign(static_cast<size_t>(nG) * N, Character::trivial(gd.C, gd.conductor));
  for (int g = 0; g < nG; ++g) {
    Character cprod = Character::trivial(gd.C, gd.conductor);
    int eprod = 0;
    int cur = g;
    for (int i = 0; i < N; ++i) {
      dr.chi[dr.at(g, pw[i])] = cprod;
      dr.z[dr.at(g, pw[i])] = eprod;
      cprod = cprod * gd.gamma[cur];
      eprod = detail_gamma::add_in(gd.C, eprod, gd.eta[cur]);
      cur = mp.act_g(cur, 1 % N);
    }
  }
  return dr;
}

// Converse direction: restrict a realization to x = a and round-trip.
inline GammaData extract_gamma(const MatchedPair& mp, const DiagonalRealization& dr) {
  detail_gamma::power_table(mp);
  GammaData gd;
  gd.C = dr.C;
  gd.conductor = dr.conductor;
  gd.gamma.reserve(mp.nG());
  gd.eta.reserve(mp.nG());
  for (int g = 0; g < mp.nG(); ++g) {
    gd.gamma.push_back(dr.chi_at(g, 1 % mp.nF()));
    gd.eta.push_back(dr.z_index(g, 1 % mp.nF()));
  }
  return gd;
}

// With sigma trivial, R = k^G #^tau kF is braided over kC for the (z, chi)
// built from (gamma, eta) exactly when tau satisfies, for all s, t, x, y:
//   tau_{xy}(t,s) = <chi(t <| (s|>x), (s<|x) |> y), z(s,x)> tau_x(t,s)
//                   tau_y(t <| (s|>x), s <| x).
inline Report check_tau_recursion(const MatchedPair& mp, const TauTable& tu,
                                  const DiagonalRealization& dr,
                                  FailMode mode = FailMode::CountAll) {
  Report rep;
  Checker ck("tau-recursion", mode);
  const int nG = mp.nG(), nF = mp.nF();
  const int N = tu.conductor;
  if (dr.conductor != N)
    throw Error(ErrorCode::ConductorMismatch, witness("tau", N, "dr", dr.conductor));
  for (int s = 0; s < nG && ck.keep_going(); ++s)
    for (int t = 0; t < nG && ck.keep_going(); ++t)
      for (int x = 0; x < nF && ck.keep_going(); ++x)
        for (int y = 0; y < nF && ck.keep_going(); ++y) {
          const int tp = mp.act_g(t, mp.act_f(s, x));
          const int yp = mp.act_f(mp.act_g(s, x), y);
          const long long lhs = tu.exp(mp.F.mul(x, y), t, s);
          const long long rhs = dr.pair_exp(s, tp, x, yp) + tu.exp(x, t, s) +
                                tu.exp(y, tp, mp.act_g(s, x));
          ck.expect(mod_exp(lhs - rhs, N) == 0, [&] {
            return witness("s", s, "t", t, "x", x, "y", y);
          });
        }
  rep.add(ck.finish());
  return rep;
}

// Bundles the closing construction for cyclic F: build (z, chi) from
// (gamma, eta), validate, and check the tau recursion. sigma stays trivial.
struct GammaRealization {
  ExampleDataset ds;
  Report recursion;
};

inline GammaRealization cyclic_gamma_realization(const MatchedPair& mp,
                                                 const GammaData& gd,
                                                 const TauTable& tu) {
  GammaRealization out;
  out.ds.name = "gamma-realization";
  out.ds.mp = mp;
  out.ds.sigma = SigmaTable::trivial(mp.nG(), mp.nF(), tu.conductor);
  out.ds.tau = tu;
  DiagonalRealization dr = realize_from_gamma(mp, gd);
  validate_realization(mp, dr).require();
  out.recursion = check_tau_recursion(mp, tu, dr);
  out.ds.q_closed = compute_q(mp, out.ds.sigma, out.ds.tau);
  out.ds.dr = std::move(dr);
  return out;
}

}  // namespace bicross
