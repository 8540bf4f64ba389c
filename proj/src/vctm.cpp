#include "vcind/vctm.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vcind {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("vctm: " + msg);
}

std::string next_line(std::istream& in, const char* what) {
    std::string line;
    if (!std::getline(in, line)) {
        fail(std::string("unexpected end of input, expected ") + what);
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

} // namespace

TraceMatrix read_vctm(std::istream& in, bool allow_duplicates) {
    if (next_line(in, "header") != "vctm 1") {
        fail("bad header, expected \"vctm 1\"");
    }
    const std::string dims = next_line(in, "dimensions");
    std::istringstream ds(dims);
    long long width = 0;
    long long count = 0;
    std::string extra;
    if (!(ds >> width >> count) || (ds >> extra)) {
        fail("bad dimension line \"" + dims + "\"");
    }
    if (width < 1 || count < 1) {
        fail("width and row count must be >= 1");
    }

    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(count));
    std::set<Row> seen;
    for (long long i = 0; i < count; ++i) {
        const std::string line = next_line(in, "a row");
        if (line.size() != static_cast<std::size_t>(width)) {
            fail("row " + std::to_string(i) + " has length " +
                 std::to_string(line.size()) + ", expected " +
                 std::to_string(width));
        }
        for (char c : line) {
            if (c != '0' && c != '1') {
                fail("row " + std::to_string(i) + " contains character '" +
                     std::string(1, c) + "'");
            }
        }
        Row r = Row::from_string(line);
        if (!seen.insert(r).second && !allow_duplicates) {
            fail("duplicate row \"" + line + "\" (use --dedup to accept)");
        }
        rows.push_back(std::move(r));
    }
    std::string tail;
    while (std::getline(in, tail)) {
        if (!tail.empty() && tail.back() == '\r') tail.pop_back();
        if (!tail.empty()) fail("trailing content after last row");
    }
    return TraceMatrix(static_cast<std::size_t>(width), std::move(rows));
}

TraceMatrix read_vctm_file(const std::string& path, bool allow_duplicates) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    return read_vctm(in, allow_duplicates);
}

void write_vctm(std::ostream& out, const TraceMatrix& m) {
    out << "vctm 1\n" << m.width() << ' ' << m.distinct_count() << '\n';
    for (const Row& r : m.rows()) {
        out << r.to_string() << '\n';
    }
}

void write_vctm_file(const std::string& path, const TraceMatrix& m) {
    std::ofstream out(path);
    if (!out) fail("cannot open " + path + " for writing");
    write_vctm(out, m);
    if (!out) fail("write failed for " + path);
}

} // namespace vcind
