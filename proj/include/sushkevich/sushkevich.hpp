#ifndef SUSHKEVICH_SUSHKEVICH_HPP_
#define SUSHKEVICH_SUSHKEVICH_HPP_

#include "cayley.hpp"        // IWYU pragma: export
#include "embedding.hpp"     // IWYU pragma: export
#include "error.hpp"         // IWYU pragma: export
#include "field.hpp"         // IWYU pragma: export
#include "presentation.hpp"  // IWYU pragma: export
#include "rank1.hpp"         // IWYU pragma: export
#include "rewriting.hpp"     // IWYU pragma: export
#include "serialize.hpp"     // IWYU pragma: export
#include "word.hpp"          // IWYU pragma: export

#endif  // SUSHKEVICH_SUSHKEVICH_HPP_
