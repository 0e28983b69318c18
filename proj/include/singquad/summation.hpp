#pragma once

namespace singquad {

// Neumaier's variant of Kahan summation.  The branch keeps the correction
// useful even when the running sum is smaller than the incoming term, which
// happens a lot for the alternating-ish endpoint corrections we feed it.
//
// All grid sums in this library accumulate through this type in a fixed
// ascending-k order so results are bit-reproducible across runs.
template <class Real>
class CompensatedSum {
 public:
  void add(Real term) {
    const Real t = sum_ + term;
    if ((sum_ >= Real(0) ? sum_ : -sum_) >= (term >= Real(0) ? term : -term)) {
      comp_ += (sum_ - t) + term;
    } else {
      comp_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  Real value() const { return sum_ + comp_; }

 private:
  Real sum_ = Real(0);
  Real comp_ = Real(0);
};

}  // namespace singquad
