#pragma once

#include <cstdint>

#include "starcolor/families.hpp"
#include "starcolor/json_io.hpp"

namespace starcolor {

// Document assembly for generated family instances: the graph, a family tag
// for downstream algorithm dispatch, Halin structure where applicable, and
// vertex labels where the construction has natural names.  These are what
// the generator CLI writes and what the bench harness replays.

GraphDocument path_document(int n);
GraphDocument cycle_document(int n);
GraphDocument path_square_document(int n);
GraphDocument cycle_square_document(int n);
GraphDocument petersen3n_document(int n);
GraphDocument necklace_document(int h);
GraphDocument random_cubic_halin_document(int leaves, std::uint64_t seed);
GraphDocument complete_halin_document(const CompleteHalinSpec& spec);
GraphDocument wheel_document(int n);
GraphDocument complete_document(int n);
GraphDocument net_document();
GraphDocument fan3_document();
GraphDocument h0_document();

}  // namespace starcolor
