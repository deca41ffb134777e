#pragma once

#include <Eigen/Dense>

namespace hg {

// Unnormalized forward transform, inverse scaled by 1/n (numpy convention).
void fft(Eigen::Ref<Eigen::VectorXcd> x, bool inverse = false);
void fft2(Eigen::MatrixXcd& a, bool inverse = false);

// Signed integer frequency of bin k on an n-point grid; the Nyquist bin maps to -n/2.
inline int fftfreq_index(int k, int n) { return k < n / 2 ? k : k - n; }

}  // namespace hg
