#include "f2forms/bilinear_form.hpp"

#include <utility>

#include "f2forms/errors.hpp"

namespace f2forms {

BilinearForm::BilinearForm(BitMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw ShapeError("BilinearForm: matrix must be square");
}

BilinearForm BilinearForm::from_form(const MultilinearForm& form) {
  return BilinearForm(form.to_matrix());
}

}  // namespace f2forms
