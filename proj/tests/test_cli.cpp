#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ted/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = ted::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               fs::path("ted-cli-test-" + std::to_string(::getpid()) + "-" +
                        std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name, const std::string& content) {
        fs::path p = path / name;
        std::ofstream f(p);
        f << content;
        return p.string();
    }
};

}  // namespace

TEST_CASE("cli compute") {
    TempDir tmp;
    std::string a = tmp.file("a.bracket", "{a{b}{c}}\n");
    std::string b = tmp.file("b.bracket", "{a{b}}\n");

    auto same = run_cli({"compute", a, a});
    CHECK(same.code == 0);
    CHECK(same.out == "0\n");

    for (const char* algo :
         {"rted", "zhang-l", "zhang-r", "klein-h", "demaine-h", "brute"}) {
        auto r = run_cli({"compute", a, b, "--algo", algo});
        CHECK(r.code == 0);
        CHECK(r.out == "1\n");
    }

    auto rep = run_cli({"compute", a, b, "--report", "csv"});
    CHECK(rep.code == 0);
    CHECK(rep.out.find("algo,distance,subproblems") == 0);
    CHECK(rep.out.find("rted,1,") != std::string::npos);

    std::string bad = tmp.file("bad.bracket", "{a{b}\n");
    auto broken = run_cli({"compute", a, bad});
    CHECK(broken.code == 2);
    CHECK(!broken.err.empty());

    auto usage = run_cli({"compute", a});
    CHECK(usage.code == 2);
}

TEST_CASE("cli compute oracle guard") {
    TempDir tmp;
    std::ostringstream big;
    for (int i = 0; i < 60; ++i) big << "{x";
    for (int i = 0; i < 60; ++i) big << "}";
    std::string f = tmp.file("big.bracket", big.str());
    auto r = run_cli({"compute", f, f, "--algo", "brute"});
    CHECK(r.code == 3);
}

TEST_CASE("cli generate") {
    auto lb = run_cli({"generate", "--shape", "left-branch", "--size", "3"});
    CHECK(lb.code == 0);
    CHECK(lb.out == "{x{x}{x}}\n");

    auto r1 = run_cli({"generate", "--shape", "random", "--size", "40",
                       "--seed", "7", "--random-labels"});
    auto r2 = run_cli({"generate", "--shape", "random", "--size", "40",
                       "--seed", "7", "--random-labels"});
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);

    auto bad = run_cli({"generate", "--shape", "left-branch", "--size", "4"});
    CHECK(bad.code == 2);
}

TEST_CASE("cli ingest") {
    TempDir tmp;
    std::string x = tmp.file("doc.xml", "<a><b/></a>");
    auto r = run_cli({"ingest", "--xml", x});
    CHECK(r.code == 0);
    CHECK(r.out == "{a{b}}\n");

    std::string malformed = tmp.file("bad.xml", "<a><b></a>");
    CHECK(run_cli({"ingest", "--xml", malformed}).code == 2);
}

TEST_CASE("cli count") {
    auto r = run_cli({"count", "--shapes", "left-branch", "--sizes", "1",
                      "--algos", "rted,zhang-l,zhang-r,klein-h,demaine-h"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "shape,size,algo,subproblems");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.substr(line.rfind(',') + 1) == "1");
    }
    CHECK(rows == 5);

    // executed counter equals the prediction in every row
    auto ex = run_cli({"count", "--shapes", "mixed,random", "--sizes", "21",
                       "--algos", "rted,klein-h", "--execute"});
    CHECK(ex.code == 0);
    std::istringstream xlines(ex.out);
    std::getline(xlines, line);
    CHECK(line == "shape,size,algo,subproblems,executed");
    while (std::getline(xlines, line)) {
        auto last = line.rfind(',');
        auto prev = line.rfind(',', last - 1);
        CHECK(line.substr(prev + 1, last - prev - 1) == line.substr(last + 1));
    }

    CHECK(run_cli({"count", "--shapes", "nope", "--sizes", "3"}).code == 2);
}

TEST_CASE("cli join") {
    TempDir tmp;
    tmp.file("t1.bracket", "{a{b}{c}}");
    tmp.file("t2.bracket", "{a{b}{c}}");
    tmp.file("t3.bracket", "{z{q}}");

    auto r = run_cli({"join", "--dir", tmp.path.string(), "--tau", "1",
                      "--algo", "rted", "--pairs-out",
                      (tmp.path / "pairs.csv").string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("algo,pairs,matched,subproblems,time_ms") == 0);
    CHECK(r.out.find("rted,3,1,") != std::string::npos);

    std::ifstream pairs(tmp.path / "pairs.csv");
    std::string content((std::istreambuf_iterator<char>(pairs)),
                        std::istreambuf_iterator<char>());
    CHECK(content == "file_a,file_b,distance\nt1.bracket,t2.bracket,0\n");

    TempDir single;
    single.file("only.bracket", "{a}");
    auto one = run_cli({"join", "--dir", single.path.string()});
    CHECK(one.code == 0);
    CHECK(one.out.find("rted,0,0,0,") != std::string::npos);

    CHECK(run_cli({"join", "--dir", (tmp.path / "missing").string()}).code ==
          2);

    // thread count must not change results (timings aside)
    auto t1 = run_cli({"join", "--dir", tmp.path.string(), "--algo", "all"});
    auto t4 = run_cli({"join", "--dir", tmp.path.string(), "--algo", "all",
                       "--threads", "4"});
    auto strip_times = [](const std::string& s) {
        std::istringstream in(s);
        std::string line, acc;
        while (std::getline(in, line))
            acc += line.substr(0, line.rfind(',')) + "\n";
        return acc;
    };
    CHECK(strip_times(t1.out) == strip_times(t4.out));
}

TEST_CASE("cli strategy dump") {
    TempDir tmp;
    std::string a = tmp.file("a.bracket", "{c{a}{b}}");
    std::string b = tmp.file("b.bracket", "{b{a}}");
    auto r = run_cli({"strategy", a, b});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "v,w,side,kind");
    int rows = 0;
    std::string last;
    while (std::getline(lines, line)) {
        ++rows;
        last = line;
    }
    CHECK(rows == 6);
    CHECK(last == "3,2,F,heavy");
}
