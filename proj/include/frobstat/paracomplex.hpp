#ifndef FROBSTAT_PARACOMPLEX_HPP
#define FROBSTAT_PARACOMPLEX_HPP

namespace frobstat {

// Element a + b eps of the rank-2 algebra with eps^2 = +1.
struct ParacomplexNumber {
  double re = 0.0;
  double im = 0.0;
};

// Coordinates in the idempotent basis e_pm = (1 pm eps)/2; multiplication is
// componentwise in this form.
struct ParaSplit {
  double plus = 0.0;
  double minus = 0.0;
};

inline ParacomplexNumber pc_mul(const ParacomplexNumber& a, const ParacomplexNumber& b) {
  return {a.re * b.re + a.im * b.im, a.re * b.im + a.im * b.re};
}

inline ParaSplit split(const ParacomplexNumber& x) {
  return {x.re + x.im, x.re - x.im};
}

inline ParacomplexNumber unsplit(const ParaSplit& s) {
  return {0.5 * (s.plus + s.minus), 0.5 * (s.plus - s.minus)};
}

}  // namespace frobstat

#endif
