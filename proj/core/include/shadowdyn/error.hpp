#pragma once

#include <stdexcept>
#include <string>

namespace shadowdyn {

enum class Errc {
  NotAUnit,
  DepthLimit,
  NotIndefinite,
  SquareDiscriminant,
  ZeroValueEncountered,
  InvalidTriple,
  SquareInput,
  BadEuclidTriple,
  DegenerateImage,
  InvalidArgument,
  Parse,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace shadowdyn
