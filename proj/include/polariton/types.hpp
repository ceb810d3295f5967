#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace polariton {

using complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

// Unit conventions used throughout: frequencies are measured in units of the
// matter resonance frequency omega0, wavenumbers in omega0/c, times in
// 1/omega0. In these units omega0 = 1 and c = 1, and the remaining physical
// constants (hbar, eps0, the field-matter coupling, the medium density)
// cancel from every quantity this library computes.

/// Thrown when an iterative numerical scheme (quadrature, root finding,
/// series acceleration) fails to reach its target accuracy.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

}  // namespace polariton
