#include "g2alg/form2.hpp"

#include <stdexcept>

namespace g2alg {

Form2 Form2::interior_phi(const Vec7& u) {
  const auto& T = StructureTensors::standard();
  Mat7 m = Mat7::Zero();
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      double acc = 0.0;
      for (int p = 1; p <= 7; ++p) {
        const int c = T.phi(p, i, j);
        if (c != 0) acc += u(p - 1) * c;
      }
      m(i - 1, j - 1) = acc;
      m(j - 1, i - 1) = -acc;
    }
  return Form2(m);
}

Form2 Form2::from_matrix(const Mat7& m, double rel_tol) {
  const double scale = m.norm();
  const double skew_err = (m + m.transpose()).norm();
  if (scale > 0.0 && skew_err > rel_tol * scale)
    throw std::invalid_argument("matrix is not skew-symmetric within tolerance");
  return Form2(0.5 * (m - m.transpose()));
}

Form to_form(const Form2& x) {
  Form f(2);
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) f.set({i, j}, x(i, j));
  return f;
}

Form2 to_form2(const Form& f) {
  if (f.degree() != 2) throw std::invalid_argument("expected a 2-form");
  Mat7 m = Mat7::Zero();
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      const double c = f.value({i, j});
      m(i - 1, j - 1) = c;
      m(j - 1, i - 1) = -c;
    }
  return Form2::from_matrix_unchecked(m);
}

}  // namespace g2alg
