#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#ifndef CGT_CLI
#error "CGT_CLI must name the command-line binary"
#endif
#ifndef CGT_DATA_DIR
#define CGT_DATA_DIR "data"
#endif

namespace {

struct Run {
    int code = -1;
    std::string out;
};

std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

Run run(const std::string& args) {
    Run r;
    const std::string cmd = quote(CGT_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& rel) { return quote(std::string(CGT_DATA_DIR) + "/" + rel); }

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

std::string temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("cgt_cli_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("compare") {
    Run r = run("compare lin3 a '{a|a}'");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("equivalent\n", 0) == 0);
    CHECK(run("compare lin3 a T").out.rfind("less\n", 0) == 0);
    CHECK(run("compare lin3 T a").out.rfind("greater\n", 0) == 0);
    CHECK(run("compare anti2 a b").out.rfind("incomparable\n", 0) == 0);
    Run rec = run("--format records compare lin3 a T");
    CHECK(rec.out.find("relation\tless\n") != std::string::npos);
    CHECK(run("compare " + data("posets/lin3.poset") + " a '{a|a}'").out.rfind("equivalent", 0) == 0);
}

TEST_CASE("enumerate prints one line per value") {
    Run r = run("enumerate lin4 --depth 4");
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 31);
    CHECK(r.out.rfind("G0 0 ", 0) == 0);
    // Byte-stable across runs and worker settings.
    CHECK(run("--jobs 4 enumerate lin4 --depth 4").out == r.out);
    CHECK(count_lines(run("enumerate bool --depth 3").out) == 3);
    CHECK(count_lines(run("enumerate lin3 --depth 2").out) == 8);
}

TEST_CASE("strip table") {
    Run r = run("strip -k 4 table --to 16");
    CHECK(r.code == 0);
    CHECK(r.out.find("s 1 2 2 3 4 4 5 6 6 7 8 8 9\n") != std::string::npos);
    CHECK(run("strip -k 4 min-stones -n 12").out == "6\n");
    Run p = run("strip -k 4 period");
    CHECK(p.code == 0);
    CHECK(p.out.find('3') != std::string::npos);
}

TEST_CASE("other subcommands succeed") {
    CHECK(run("canon anti2 '{{T|{{T|a},{T|{b|B}}|B}}|a}'").out == "{a,b|a}\n");
    CHECK(run("monotonize anti2 '{a,b|a}'").code == 0);
    CHECK(run("opp lin3 '{T|a}'").code == 0);
    CHECK(run("sum lin3 a bool T").code == 0);
    CHECK(run("hex-eval " + data("regions/two-terminal/star.region")).out.rfind("value {T|B}\n", 0) == 0);
    CHECK(run("poset nc3").code == 0);
    CHECK(run("strip -k 4 poset").code == 0);
    CHECK(run("strip -k 4 value " + data("strip/open_position_k4.txt")).code == 0);
    CHECK(run("lr-classes lin3 B a T").code == 0);
}

TEST_CASE("exit codes") {
    // Parse errors.
    CHECK(run("compare lin3 a '{|a}'").code == 2);
    CHECK(run("compare lin3 a '{a|b}'").code == 2);
    const std::string bad_poset = temp_file("bad.poset", "poset P\natoms: a b\ncover: a < c\n");
    CHECK(run("compare " + quote(bad_poset) + " a b").code == 2);
    CHECK(run("no-such-subcommand").code == 2);
    // Precondition and invalid input.
    CHECK(run("monotonize lin3 '{B|T}'").code == 3);
    CHECK(run("hex-eval /nonexistent/file.region").code == 3);
    const std::string bad_region = temp_file("bad.region", "region x\ncell 1 1 .\nterminal 1: (1,1)\n");
    CHECK(run("hex-eval " + quote(bad_region)).code == 3);
    CHECK(run("strip -k 9 min-stones -n 3").code == 3);
    // Resource limits.
    CHECK(run("--budget-nodes 5 enumerate lin4 --depth 4").code == 4);
    // Property violations: two fixtures with one label and different values.
    const std::string clash = temp_file("clash.txt", "G1 1 4 : (2,3)\nG1 1 4 : (1,1)\n");
    CHECK(run("strip -k 4 certify --fixtures " + quote(clash)).code == 5);
}

}
