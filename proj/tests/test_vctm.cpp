#include <doctest.h>

#include <sstream>

#include "vcind/vctm.hpp"

using namespace vcind;

namespace {

TraceMatrix parse(const std::string& text, bool dedup = false) {
    std::istringstream in(text);
    return read_vctm(in, dedup);
}

} // namespace

TEST_CASE("vctm round trip") {
    TraceMatrix m(4, {Row::from_string("0011"), Row::from_string("1100"),
                      Row::from_string("0000")});
    std::ostringstream out;
    write_vctm(out, m);
    TraceMatrix back = parse(out.str());
    CHECK(back.width() == m.width());
    CHECK(back.rows() == m.rows());
}

TEST_CASE("vctm strict parsing rejects malformed input") {
    CHECK_THROWS(parse(""));
    CHECK_THROWS(parse("vctm 2\n2 1\n01\n"));
    CHECK_THROWS(parse("vctm 1\n2\n01\n"));           // missing row count
    CHECK_THROWS(parse("vctm 1\n2 1 9\n01\n"));       // stray dimension
    CHECK_THROWS(parse("vctm 1\n0 1\n\n"));           // zero width
    CHECK_THROWS(parse("vctm 1\n2 2\n01\n"));         // too few rows
    CHECK_THROWS(parse("vctm 1\n2 1\n011\n"));        // wrong length
    CHECK_THROWS(parse("vctm 1\n2 1\n0x\n"));         // stray character
    CHECK_THROWS(parse("vctm 1\n2 1\n01\n10\n"));     // trailing content
    CHECK_THROWS(parse("vctm 1\n2 2\n01\n01\n"));     // duplicate row
}

TEST_CASE("vctm duplicate rows accepted with dedup") {
    TraceMatrix m = parse("vctm 1\n2 3\n01\n01\n10\n", true);
    CHECK(m.distinct_count() == 2);
}

TEST_CASE("vctm accepts CRLF line endings") {
    TraceMatrix m = parse("vctm 1\r\n2 1\r\n01\r\n");
    CHECK(m.distinct_count() == 1);
    CHECK(m.rows()[0].to_string() == "01");
}
