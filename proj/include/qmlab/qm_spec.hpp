#pragma once

// Declarative text for quasimorphisms and sections, e.g.
//   brooks(w=xyXY)   homog(brooks(w=xyXY))   pullback(homog(brooks(w=xyXY)), pr1)
//   hom(indexsum)    hom(expsum=x)   shiftavg(homog(brooks(w=uv)))   zero
//   section(quotient=Z, map=s1^k)

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qmlab {

struct QmSpec {
  std::string head;
  std::map<std::string, std::string> args;  // key=value arguments
  std::vector<QmSpec> children;              // positional arguments

  std::string text() const;
};

/// Throws InputError with the position of the first problem.
QmSpec parse_qm_spec(std::string_view text);

}  // namespace qmlab
