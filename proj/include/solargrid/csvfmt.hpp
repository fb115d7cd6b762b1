#ifndef SOLARGRID_CSVFMT_HPP
#define SOLARGRID_CSVFMT_HPP

#include <cstdio>
#include <string>

namespace solargrid {

/// Fixed CSV numeric format: 6 significant digits. All emitted CSVs use this
/// so golden-file comparisons are byte-exact.
inline std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace solargrid

#endif
