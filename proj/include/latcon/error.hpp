#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latcon {

  enum class ErrorKind {
    not_a_lattice,
    not_reduced,
    cyclic,
    element_out_of_range,
    zero_size,
    empty_set,
    not_a_partition,
    not_an_ideal,
    not_a_filter,
    not_convex_sublattice,
    not_isomorphic,
    incompatible,
    not_distributive,
    not_bounded,
    not_homomorphic,
    not_isotone,
    not_semimodular,
    no_corner,
    ambiguous_corner,
    corners_not_complementary,
    boundary_not_chain,
    not_a_cell,
    size_too_small,
    boundary_mismatch,
    index_out_of_range,
    flap_not_plain_grid,
    color_missing_on_lower_boundary,
    condition_i_fails,
    embedding_invalid,
    postcondition_failed,
    too_large,
    parse_error,
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          _kind(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace latcon
