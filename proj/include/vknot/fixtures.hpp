#pragma once

namespace vknot::fixtures {

inline constexpr const char* UNKNOT = "~";
inline constexpr const char* TREFOIL = "O1+,U2+,O3+,U1+,O2+,U3+";
inline constexpr const char* HOPF = "O1+,U2+;O2+,U1+";
// Virtual trefoil.  The placement and signs of the virtual passages are the
// unique assignment on this classical pattern that passes cohomological
// validation (tests derive this by enumeration).
inline constexpr const char* VIRTUAL_TREFOIL = "O1+,V9-,O2+,U1+,V9+,U2+";
// Virtual Hopf link with w(D1, D2) = 1; the transverse signs are forced the
// same way.
inline constexpr const char* VIRTUAL_HOPF = "O1+,V2-;U1+,V2+";

inline constexpr const char* ALL[] = {UNKNOT, TREFOIL, HOPF, VIRTUAL_TREFOIL, VIRTUAL_HOPF};
inline constexpr const char* NAMES[] = {"unknot", "trefoil", "hopf", "vtrefoil", "vhopf"};

}  // namespace vknot::fixtures
