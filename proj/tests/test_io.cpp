#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace maxlayers;

namespace {

auto parse(std::string const& text) -> PointSet
{
    std::istringstream in(text);
    return read_points(in);
}

auto failing_line(std::string const& text) -> std::size_t
{
    try {
        (void)parse(text);
    } catch (InputError const& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("comma and whitespace separated rows")
{
    auto const s = parse("# header\n0.9,0.9\n\n0.5 0.5\n  0.1\t0.1  \n+1e-3, -2\n");
    REQUIRE(s.size() == 4);
    CHECK(s.dimension() == 2);
    CHECK(s.coords(1)[0] == 0.5);
    CHECK(s.coords(3)[0] == 1e-3);
    CHECK(s.coords(3)[1] == -2.0);
}

TEST_CASE("empty input")
{
    auto const s = parse("");
    CHECK(s.empty());
    CHECK(s.dimension() == 0);
    CHECK(parse("# only a comment\n\n").empty());
}

TEST_CASE("bad rows name their line")
{
    CHECK(failing_line("0.1,0.2\n0.3\n") == 2);
    CHECK(failing_line("0.1,0.2\n0.3,0.4,0.5\n") == 2);
    CHECK(failing_line("# c\n0.1,0.2\n\n0.3,nan\n") == 4);
    CHECK(failing_line("0.1,inf\n") == 1);
    CHECK(failing_line("0.1,abc\n") == 1);
    CHECK(failing_line("0.1,,0.2\n") == 1);
    CHECK(failing_line("1e999,0\n") == 1);

    try {
        (void)parse("0.1,0.2\n0.3,NaN\n");
        FAIL("expected an error");
    } catch (InputError const& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("written points read back exactly")
{
    GeneratorSpec spec;
    spec.n = 200;
    spec.k = 5;
    spec.seed = 4;
    auto const s = generate(spec);
    std::ostringstream out;
    write_points(out, s);
    auto const back = parse(out.str());
    CHECK(back.size() == s.size());
    CHECK(std::ranges::equal(back.data(), s.data()));
}

TEST_CASE("missing file is an input error")
{
    CHECK_THROWS_AS((void)read_points_file("/nonexistent/points.txt"), InputError);
}
