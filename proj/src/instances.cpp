#include "sparsef2/instances.hpp"

#include <string>

#include "sparsef2/errors.hpp"

namespace sparsef2 {

void VectorSumInstance::validate() const {
  if (b.size() != m.rows()) {
    throw ValidationError("target length " + std::to_string(b.size()) + " differs from row count " +
                          std::to_string(m.rows()));
  }
  if (k < 1) throw ValidationError("sparsity k must be at least 1");
}

void EvenSetInstance::validate() const {
  if (k < 1) throw ValidationError("sparsity k must be at least 1");
  if (layout && layout->variable_count() != m.cols()) {
    throw ValidationError("layout variable count does not match the matrix width");
  }
}

void PointValueSet::validate() const {
  if (points.size() != values.size()) throw ValidationError("point and value counts differ");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim) {
      throw ValidationError("point " + std::to_string(i + 1) + " has length " + std::to_string(points[i].size()) +
                            ", expected " + std::to_string(dim));
    }
    if (values[i] > 1) throw ValidationError("value " + std::to_string(i + 1) + " is not a bit");
  }
}

}  // namespace sparsef2
