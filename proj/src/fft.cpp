#include "hg/fft.hpp"

#include <vector>

#include <unsupported/Eigen/FFT>

namespace hg {

void fft(Eigen::Ref<Eigen::VectorXcd> x, bool inverse) {
  thread_local Eigen::FFT<double> engine;
  thread_local std::vector<std::complex<double>> in, out;
  const auto n = x.size();
  in.assign(x.data(), x.data() + n);
  if (inverse)
    engine.inv(out, in);
  else
    engine.fwd(out, in);
  x = Eigen::Map<Eigen::VectorXcd>(out.data(), n);
}

void fft2(Eigen::MatrixXcd& a, bool inverse) {
  for (Eigen::Index c = 0; c < a.cols(); ++c) fft(a.col(c), inverse);
  Eigen::VectorXcd row(a.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    row = a.row(r).transpose();
    fft(row, inverse);
    a.row(r) = row.transpose();
  }
}

}  // namespace hg
