#ifndef FFL_TRANSLATE_HPP
#define FFL_TRANSLATE_HPP

#include "ffl/il.hpp"

namespace ffl::il {

// Translates a well-typed IL program to a closed FFL term of curried function
// type over the program's parameters. For-loops over ranges and foreach loops
// become fold with the live-variable tuple as accumulator; while loops become
// iter returning inr(state) to continue and inl unit to stop.
TermPtr translate(const IlProgram& p);

}  // namespace ffl::il

#endif
