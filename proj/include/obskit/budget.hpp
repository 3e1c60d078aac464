#pragma once

#include <cstddef>

namespace obskit {

/// Size limits for the normalisation engines. Intermediate objects that
/// outgrow these raise ResourceLimit instead of exhausting memory.
struct Budget {
  std::size_t maxBracket = 1'000'000;  // members of a bracket / clique family
  std::size_t maxVectors = 100'000;    // term vectors in a product representative
};

}  // namespace obskit
