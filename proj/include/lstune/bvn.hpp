#pragma once

#include <algorithm>
#include <cmath>

namespace lstune {

// Standard normal CDF.
inline double norm_cdf(double x) { return 0.5 * std::erfc(-x * 0.7071067811865476); }

inline double norm_pdf(double x) {
  return 0.3989422804014327 * std::exp(-0.5 * x * x);
}

namespace detail {

// Gauss-Legendre abscissae/weights on [-1,1], split by |rho| band as in
// Genz's rectangular bivariate normal quadrature.
struct GaussRule {
  const double* x;
  const double* w;
  int n;
};

inline GaussRule gauss_rule_for(double abs_rho) {
  static const double x6[3] = {-0.9324695142031521, -0.6612093864662645,
                               -0.2386191860831969};
  static const double w6[3] = {0.1713244923791704, 0.3607615730481386,
                               0.4679139345726910};
  static const double x12[6] = {-0.9815606342467192, -0.9041172563704749,
                                -0.7699026741943047, -0.5873179542866175,
                                -0.3678314989981802, -0.1252334085114689};
  static const double w12[6] = {0.04717533638651183, 0.1069393259953184,
                                0.1600783285433462,  0.2031674267230659,
                                0.2334925365383548,  0.2491470458134028};
  static const double x20[10] = {-0.9931285991850949, -0.9639719272779138,
                                 -0.9122344282513259, -0.8391169718222188,
                                 -0.7463319064601508, -0.6360536807265150,
                                 -0.5108670019508271, -0.3737060887154195,
                                 -0.2277858511416451, -0.07652652113349734};
  static const double w20[10] = {0.01761400713915212, 0.04060142980038694,
                                 0.06267204833410907, 0.08327674157670475,
                                 0.1019301198172404,  0.1181945319615184,
                                 0.1316886384491766,  0.1420961093183820,
                                 0.1491729864726037,  0.1527533871307258};
  if (abs_rho < 0.3) return {x6, w6, 3};
  if (abs_rho < 0.75) return {x12, w12, 6};
  return {x20, w20, 10};
}

}  // namespace detail

// Upper-orthant probability P(X > h, Y > k) for a standard bivariate normal
// with correlation rho. Genz's hybrid of the Drezner-Wesolowsky integral
// (|rho| <= 0.925) and the high-correlation expansion.
inline double bvn_upper(double h, double k, double rho) {
  constexpr double kTwoPi = 6.283185307179586;
  const auto rule = detail::gauss_rule_for(std::fabs(rho));
  double hk = h * k;
  double bvn = 0.0;

  if (std::fabs(rho) <= 0.925) {
    if (std::fabs(rho) > 0.0) {
      double hs = 0.5 * (h * h + k * k);
      double asr = std::asin(rho);
      for (int i = 0; i < rule.n; ++i) {
        for (int is = -1; is <= 1; is += 2) {
          double sn = std::sin(asr * (is * rule.x[i] + 1.0) * 0.5);
          bvn += rule.w[i] * std::exp((sn * hk - hs) / (1.0 - sn * sn));
        }
      }
      bvn *= asr / (2.0 * kTwoPi);
    }
    return bvn + norm_cdf(-h) * norm_cdf(-k);
  }

  if (rho < 0.0) {
    k = -k;
    hk = -hk;
  }
  if (std::fabs(rho) < 1.0) {
    double as = (1.0 - rho) * (1.0 + rho);
    double a = std::sqrt(as);
    double bs = (h - k) * (h - k);
    double c = (4.0 - hk) / 8.0;
    double d = (12.0 - hk) / 16.0;
    double asr = -0.5 * (bs / as + hk);
    if (asr > -100.0) {
      bvn = a * std::exp(asr) *
            (1.0 - c * (bs - as) * (1.0 - d * bs / 5.0) / 3.0 + c * d * as * as / 5.0);
    }
    if (-hk < 100.0) {
      double b = std::sqrt(bs);
      double sp = std::sqrt(kTwoPi) * norm_cdf(-b / a);
      bvn -= std::exp(-0.5 * hk) * sp * b * (1.0 - c * bs * (1.0 - d * bs / 5.0) / 3.0);
    }
    a *= 0.5;
    for (int i = 0; i < rule.n; ++i) {
      for (int is = -1; is <= 1; is += 2) {
        double xs = a * (is * rule.x[i] + 1.0);
        xs *= xs;
        double rs = std::sqrt(1.0 - xs);
        double asr2 = -0.5 * (bs / xs + hk);
        if (asr2 > -100.0) {
          double sp = 1.0 + c * xs * (1.0 + d * xs);
          double ep = std::exp(-hk * (1.0 - rs) / (2.0 * (1.0 + rs))) / rs;
          bvn += a * rule.w[i] * std::exp(asr2) * (ep - sp);
        }
      }
    }
    bvn = -bvn / kTwoPi;
  }
  if (rho > 0.0) {
    bvn += norm_cdf(-std::max(h, k));
  } else {
    bvn = -bvn;
    if (k > h) bvn += norm_cdf(k) - norm_cdf(h);
  }
  return std::clamp(bvn, 0.0, 1.0);
}

// P(X <= x, Y <= y) for a standard bivariate normal with correlation rho.
inline double bvn_cdf(double x, double y, double rho) {
  return bvn_upper(-x, -y, rho);
}

}  // namespace lstune
