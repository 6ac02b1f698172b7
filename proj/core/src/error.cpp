#include "shadowdyn/error.hpp"

namespace shadowdyn {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::DepthLimit: return "DepthLimit";
    case Errc::NotIndefinite: return "NotIndefinite";
    case Errc::SquareDiscriminant: return "SquareDiscriminant";
    case Errc::ZeroValueEncountered: return "ZeroValueEncountered";
    case Errc::InvalidTriple: return "InvalidTriple";
    case Errc::SquareInput: return "SquareInput";
    case Errc::BadEuclidTriple: return "BadEuclidTriple";
    case Errc::DegenerateImage: return "DegenerateImage";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace shadowdyn
