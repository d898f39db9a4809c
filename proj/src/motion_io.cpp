#include "screwkit/motion_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <sstream>

namespace screwkit::io {

namespace {

bool to_double(const std::string& s, double& out) {
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end && std::isfinite(out);
}

std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string exact(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::vector<MotionRecord> parse_motion(std::istream& in) {
    std::vector<MotionRecord> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(strip_comment(line));
        std::vector<std::string> tok;
        for (std::string w; ss >> w;) tok.push_back(w);
        if (tok.empty()) continue;

        std::vector<double> nums;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            double v;
            if (!to_double(tok[i], v)) throw ParseError(lineno, "not a number: '" + tok[i] + "'");
            nums.push_back(v);
        }
        MotionRecord r;
        if (tok[0] == "rot") {
            if (nums.size() != 7) throw ParseError(lineno, "rot expects 7 numbers");
            r.kind = MotionRecord::Kind::Rot;
            r.dir = {nums[0], nums[1], nums[2]};
            r.point = {nums[3], nums[4], nums[5]};
            r.angle = nums[6];
            if (r.dir.norm() <= 1e-12) throw ParseError(lineno, "zero axis direction");
        } else if (tok[0] == "trans") {
            if (nums.size() != 3) throw ParseError(lineno, "trans expects 3 numbers");
            r.t = {nums[0], nums[1], nums[2]};
        } else {
            throw ParseError(lineno, "unknown record '" + tok[0] + "'");
        }
        out.push_back(r);
    }
    if (out.empty()) throw ParseError(std::max(lineno, 1), "no records");
    return out;
}

std::string format_motion(const std::vector<MotionRecord>& records) {
    std::string s;
    for (const MotionRecord& r : records) {
        if (r.kind == MotionRecord::Kind::Rot) {
            s += "rot " + exact(r.dir.x) + " " + exact(r.dir.y) + " " + exact(r.dir.z) + " " +
                 exact(r.point.x) + " " + exact(r.point.y) + " " + exact(r.point.z) + " " +
                 exact(r.angle) + "\n";
        } else {
            s += "trans " + exact(r.t.x) + " " + exact(r.t.y) + " " + exact(r.t.z) + "\n";
        }
    }
    return s;
}

Rotation to_rotation(const MotionRecord& r, bool radians) {
    const double angle = radians ? r.angle : r.angle * kPi / 180.0;
    return {{r.point, make_unit(r.dir)}, angle};
}

std::vector<Correspondence> parse_correspondences(std::istream& in) {
    std::vector<Correspondence> out;
    std::string line;
    int lineno = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string c; std::getline(ss, c, ',');) {
            const auto b = c.find_first_not_of(" \t");
            const auto e = c.find_last_not_of(" \t");
            cells.push_back(b == std::string::npos ? "" : c.substr(b, e - b + 1));
        }
        double v[6];
        bool numeric = cells.size() == 6;
        for (std::size_t i = 0; numeric && i < 6; ++i) numeric = to_double(cells[i], v[i]);
        if (!numeric) {
            if (first) {
                first = false;
                continue;
            }
            throw ParseError(lineno, "expected 6 comma-separated numbers");
        }
        first = false;
        out.push_back({{v[0], v[1], v[2]}, {v[3], v[4], v[5]}});
    }
    return out;
}

}  // namespace screwkit::io
