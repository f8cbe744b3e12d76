#pragma once

#include <stdexcept>
#include <string>

namespace partcalc {

enum class errc {
  atom_not_in_range,
  ranges_not_disjoint,
  incomplete_insertion_map,
  bad_index,
  not_a_quotient_shape,
  not_a_restriction,
  trivial_quotient,
  not_admissible,
  not_admissible_to_tuple,
  empty_guest,
  empty_operand,
  invalid_graph,
  bad_selection,
  disconnected,
  kind_mismatch,
  result_not_admissible,
  parse_error,
  validation_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::atom_not_in_range: return "AtomNotInRange";
    case errc::ranges_not_disjoint: return "RangesNotDisjoint";
    case errc::incomplete_insertion_map: return "IncompleteInsertionMap";
    case errc::bad_index: return "BadIndex";
    case errc::not_a_quotient_shape: return "NotAQuotientShape";
    case errc::not_a_restriction: return "NotARestriction";
    case errc::trivial_quotient: return "TrivialQuotient";
    case errc::not_admissible: return "NotAdmissible";
    case errc::not_admissible_to_tuple: return "NotAdmissibleToTuple";
    case errc::empty_guest: return "EmptyGuest";
    case errc::empty_operand: return "EmptyOperand";
    case errc::invalid_graph: return "InvalidGraph";
    case errc::bad_selection: return "BadSelection";
    case errc::disconnected: return "Disconnected";
    case errc::kind_mismatch: return "KindMismatch";
    case errc::result_not_admissible: return "ResultNotAdmissible";
    case errc::parse_error: return "ParseError";
    case errc::validation_error: return "ValidationError";
  }
  return "UnknownError";
}

// Every precondition or validation failure in the library throws this.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace partcalc
