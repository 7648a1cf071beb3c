#pragma once

// Umbrella header for the whole engine.

#include "hstar/subset.hpp"     // IWYU pragma: export
#include "hstar/family.hpp"     // IWYU pragma: export
#include "hstar/space.hpp"      // IWYU pragma: export
#include "hstar/ladder.hpp"     // IWYU pragma: export
#include "hstar/separation.hpp" // IWYU pragma: export
#include "hstar/map.hpp"        // IWYU pragma: export
#include "hstar/enumerate.hpp"  // IWYU pragma: export
#include "hstar/audit.hpp"      // IWYU pragma: export
#include "hstar/mine.hpp"       // IWYU pragma: export
#include "hstar/document.hpp"   // IWYU pragma: export
#include "hstar/report.hpp"     // IWYU pragma: export
#include "hstar/repro.hpp"      // IWYU pragma: export
