#pragma once

#include "screwkit/core.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace screwkit::io {

/// One line of a motion file.
///
///   rot <dx> <dy> <dz> <px> <py> <pz> <angle>
///   trans <tx> <ty> <tz>
struct MotionRecord {
    enum class Kind { Rot, Trans };
    Kind kind{Kind::Trans};
    Vec3 dir;      ///< rot: axis direction (not necessarily unit)
    Vec3 point;    ///< rot: point on the axis
    double angle{0.0};  ///< rot: in file units (degrees unless --radians)
    Vec3 t;        ///< trans

    bool operator==(const MotionRecord&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_{line} {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Records in file order; `#` starts a comment. Throws ParseError, including
/// for a file with no records.
std::vector<MotionRecord> parse_motion(std::istream& in);

/// Text that parse_motion reads back to the same records.
std::string format_motion(const std::vector<MotionRecord>& records);

/// The rotation of a `rot` record.
Rotation to_rotation(const MotionRecord& r, bool radians);

/// Rows x,y,z,xp,yp,zp; a non-numeric first row is taken as a header.
std::vector<Correspondence> parse_correspondences(std::istream& in);

}  // namespace screwkit::io
