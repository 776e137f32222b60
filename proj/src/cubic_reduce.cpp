#include "classieve/cubic_reduce.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "classieve/rational.hpp"

namespace classieve::detail {

namespace {

// ---------------------------------------------------------------------------
// Exact arithmetic in Q[T]/(a T^3 + b T^2 + c T + d), elements of degree <= 2.

struct QTheta {
  Rational c0, c1, c2;  // c0 + c1 T + c2 T^2
  bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }
};

struct ThetaCtx {
  Rational a, b, c, d;
  Rational r2, r1, r0;  // T^3 = r2 T^2 + r1 T + r0
  Rational lo, hi;      // isolating interval of the unique real root
  int sign_a = 0;       // sign(f) left of the root is -sign_a, right is +sign_a
};

QTheta add(const QTheta& x, const QTheta& y) {
  return {x.c0 + y.c0, x.c1 + y.c1, x.c2 + y.c2};
}
QTheta sub(const QTheta& x, const QTheta& y) {
  return {x.c0 - y.c0, x.c1 - y.c1, x.c2 - y.c2};
}
QTheta scale(const QTheta& x, const Rational& s) {
  return {x.c0 * s, x.c1 * s, x.c2 * s};
}

QTheta mul(const ThetaCtx& ctx, const QTheta& x, const QTheta& y) {
  const Rational z0 = x.c0 * y.c0;
  const Rational z1 = x.c0 * y.c1 + x.c1 * y.c0;
  Rational z2 = x.c0 * y.c2 + x.c1 * y.c1 + x.c2 * y.c0;
  const Rational z3 = x.c1 * y.c2 + x.c2 * y.c1;
  const Rational z4 = x.c2 * y.c2;
  // T^3 = r2 T^2 + r1 T + r0, T^4 = (r2^2 + r1) T^2 + (r2 r1 + r0) T + r2 r0.
  Rational out0 = z0 + z3 * ctx.r0 + z4 * (ctx.r2 * ctx.r0);
  Rational out1 = z1 + z3 * ctx.r1 + z4 * (ctx.r2 * ctx.r1 + ctx.r0);
  z2 += z3 * ctx.r2 + z4 * (ctx.r2 * ctx.r2 + ctx.r1);
  return {std::move(out0), std::move(out1), std::move(z2)};
}

Rational eval_poly(const QTheta& g, const Rational& t) {
  return (g.c2 * t + g.c1) * t + g.c0;
}

Rational eval_f(const ThetaCtx& ctx, const Rational& t) {
  return ((ctx.a * t + ctx.b) * t + ctx.c) * t + ctx.d;
}

Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

ThetaCtx make_ctx(const CubicForm& f) {
  ThetaCtx ctx;
  ctx.a = rat(f.a);
  ctx.b = rat(f.b);
  ctx.c = rat(f.c);
  ctx.d = rat(f.d);
  ctx.r2 = -ctx.b / ctx.a;
  ctx.r1 = -ctx.c / ctx.a;
  ctx.r0 = -ctx.d / ctx.a;
  // Cauchy bound: all roots have |t| < 1 + max(|b|,|c|,|d|)/|a|.
  Rational m = std::max({rat_abs(ctx.b), rat_abs(ctx.c), rat_abs(ctx.d)});
  Rational bound = Rational(1) + m / rat_abs(ctx.a);
  ctx.lo = -bound;
  ctx.hi = bound;
  ctx.sign_a = sgn(ctx.a);
  // With disc < 0, f = a (t - theta) ((t - rho)^2 + sigma^2), so
  // sign f(t) = sign(a) * sign(t - theta): one sign change across theta.
  return ctx;
}

void bisect_once(ThetaCtx& ctx) {
  const Rational mid = (ctx.lo + ctx.hi) / 2;
  const Rational fm = eval_f(ctx, mid);
  if (fm == 0)
    throw std::logic_error("theta is rational; form must be irreducible");
  if (sgn(fm) == ctx.sign_a)
    ctx.hi = mid;  // mid is right of the root
  else
    ctx.lo = mid;
}

// Exact sign of g(theta). Terminates because g(theta) != 0 for nonzero g of
// degree <= 2 when the minimal polynomial of theta has degree 3.
int sign_at_theta(ThetaCtx& ctx, const QTheta& g) {
  if (g.is_zero()) return 0;
  for (int iter = 0; iter < 100000; ++iter) {
    const Rational mabs = std::max(rat_abs(ctx.lo), rat_abs(ctx.hi));
    const Rational lip = 2 * rat_abs(g.c2) * mabs + rat_abs(g.c1);
    const Rational mid = (ctx.lo + ctx.hi) / 2;
    const Rational v = eval_poly(g, mid);
    const Rational width = ctx.hi - ctx.lo;
    if (rat_abs(v) > lip * width) return sgn(v);
    bisect_once(ctx);
  }
  throw std::runtime_error("sign_at_theta: bisection failed to converge");
}

// J covariant entries as elements of Q(theta):
//   A = t2 + u2, B = -2 (t2 theta + u2 rho), C = t2 theta^2 + u2 n2, where
//   rho = -(b + a theta) / (2a), n2 = rho^2 + sigma^2 = (a th^2 + b th + c)/a,
//   t2 = a^2 sigma^2, u2 = a^2 ((theta - rho)^2 + sigma^2).
struct JExact {
  QTheta A, B, C;
};

JExact j_exact(ThetaCtx& ctx) {
  const QTheta theta{0, 1, 0};
  const QTheta theta2 = mul(ctx, theta, theta);
  const Rational inv2a = Rational(1) / (2 * ctx.a);
  const QTheta rho = scale(add(scale(theta, ctx.a), QTheta{ctx.b, 0, 0}),
                           -inv2a);
  const QTheta n2 = scale(
      add(add(scale(theta2, ctx.a), scale(theta, ctx.b)), QTheta{ctx.c, 0, 0}),
      Rational(1) / ctx.a);
  const QTheta rho2 = mul(ctx, rho, rho);
  const QTheta sigma2 = sub(n2, rho2);
  const Rational a2 = ctx.a * ctx.a;
  const QTheta t2 = scale(sigma2, a2);
  const QTheta diff = sub(theta, rho);
  const QTheta u2 = scale(add(mul(ctx, diff, diff), sigma2), a2);
  JExact j;
  j.A = add(t2, u2);
  j.B = scale(add(mul(ctx, t2, theta), mul(ctx, u2, rho)), Rational(-2));
  j.C = add(mul(ctx, mul(ctx, t2, theta), theta), mul(ctx, u2, n2));
  return j;
}

constexpr double kMaybeMargin = 1e-7;

}  // namespace

Hessian hessian(const CubicForm& f) {
  const i128 P = static_cast<i128>(f.b) * f.b - static_cast<i128>(3) * f.a * f.c;
  const i128 Q = static_cast<i128>(f.b) * f.c - static_cast<i128>(9) * f.a * f.d;
  const i128 R = static_cast<i128>(f.c) * f.c - static_cast<i128>(3) * f.b * f.d;
  const i128 lim = i128(1) << 62;
  if (P > lim || P < -lim || Q > lim || Q < -lim || R > lim || R < -lim)
    throw std::overflow_error("hessian: coefficient overflow");
  return {static_cast<i64>(P), static_cast<i64>(Q), static_cast<i64>(R)};
}

bool hessian_reduced(const CubicForm& f) {
  const Hessian h = hessian(f);
  const i64 aq = h.Q < 0 ? -h.Q : h.Q;
  return aq <= h.P && h.P <= h.R && h.P >= 1;
}

JApprox j_approx(const CubicForm& f) {
  const double a = static_cast<double>(f.a);
  const double b = static_cast<double>(f.b);
  const double c = static_cast<double>(f.c);
  const double d = static_cast<double>(f.d);
  JApprox bad{0, 0, 0, -1};
  if (f.a == 0 || f.d == 0) return bad;  // reducible; caller discards

  // Unique real root via bracket-safeguarded Newton. With disc < 0,
  // sign f(t) = sign(a) sign(t - theta).
  const double bound =
      1.0 + std::max({std::fabs(b), std::fabs(c), std::fabs(d)}) / std::fabs(a);
  double lo = -bound, hi = bound;
  const double sa = a > 0 ? 1.0 : -1.0;
  double t = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double ft = ((a * t + b) * t + c) * t + d;
    if (ft == 0) break;
    if (ft * sa > 0)
      hi = t;
    else
      lo = t;
    const double dft = (3 * a * t + 2 * b) * t + c;
    double next = dft != 0 ? t - ft / dft : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - t) <= 1e-15 * std::max(1.0, std::fabs(next))) {
      t = next;
      break;
    }
    t = next;
  }
  const double theta = t;

  const double rho = (-b / a - theta) / 2;
  const double n2 = ((a * theta + b) * theta + c) / a;  // rho^2 + sigma^2
  const double sigma2 = n2 - rho * rho;
  if (!(sigma2 > 0)) return bad;  // disc >= 0 or numeric degeneracy
  const double a2 = a * a;
  const double t2 = a2 * sigma2;
  const double diff = theta - rho;
  const double u2 = a2 * (diff * diff + sigma2);
  JApprox j;
  j.A = t2 + u2;
  j.B = -2 * (t2 * theta + u2 * rho);
  j.C = t2 * theta * theta + u2 * n2;
  j.margin = kMaybeMargin * (std::fabs(j.A) + std::fabs(j.C) + 1.0);
  return j;
}

bool j_reduced_maybe(const CubicForm& f) {
  const JApprox j = j_approx(f);
  if (j.margin < 0) return false;
  return std::fabs(j.B) <= j.A + j.margin && j.A <= j.C + j.margin;
}

bool j_reduced_exact(const CubicForm& f) {
  if (cubic_disc(f) >= 0)
    throw std::invalid_argument("j_reduced_exact: needs disc < 0");
  if (!cubic_irreducible(f))
    throw std::invalid_argument("j_reduced_exact: needs an irreducible form");
  ThetaCtx ctx = make_ctx(f);
  const JExact j = j_exact(ctx);

  // Self-check: det J = AC - B^2/4 must equal |disc|/2 exactly.
  const QTheta det = sub(mul(ctx, j.A, j.C),
                         scale(mul(ctx, j.B, j.B), rat(1, 4)));
  const Rational half_abs_disc = rat(-cubic_disc(f)) / 2;
  if (!(det.c2 == 0 && det.c1 == 0 && det.c0 == half_abs_disc))
    throw std::logic_error("j_reduced_exact: det(J) != |disc|/2");

  if (sign_at_theta(ctx, sub(j.A, j.B)) < 0) return false;
  if (sign_at_theta(ctx, add(j.A, j.B)) < 0) return false;
  return sign_at_theta(ctx, sub(j.C, j.A)) >= 0;
}

bool cubic_reduced(const CubicForm& f) {
  const i64 disc = cubic_disc(f);
  if (disc == 0) throw std::invalid_argument("cubic_reduced: disc = 0");
  return disc > 0 ? hessian_reduced(f) : j_reduced_exact(f);
}

std::optional<CubicForm> canonical_cubic(const CubicForm& f) {
  const i64 disc = cubic_disc(f);
  if (disc == 0 || !cubic_irreducible(f))
    throw std::invalid_argument("canonical_cubic: needs an irreducible form");

  // Candidates +/- F o gamma over small matrices, ascending; the first
  // reduced one is the canonical representative.
  std::vector<CubicForm> cands;
  cands.reserve(96);
  for (int p = -1; p <= 1; ++p)
    for (int q = -1; q <= 1; ++q)
      for (int r = -1; r <= 1; ++r)
        for (int s = -1; s <= 1; ++s) {
          const int det = p * s - q * r;
          if (det != 1 && det != -1) continue;
          const CubicForm g = cubic_transform(f, p, q, r, s);
          if (g.a > 0)
            cands.push_back(g);
          else if (g.a < 0)
            cands.push_back({-g.a, -g.b, -g.c, -g.d});
        }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  for (const CubicForm& g : cands) {
    if (disc > 0) {
      if (hessian_reduced(g)) return g;
    } else {
      if (j_reduced_maybe(g) && j_reduced_exact(g)) return g;
    }
  }
  return std::nullopt;
}

}  // namespace classieve::detail
