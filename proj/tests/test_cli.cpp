#include "support.hpp"

#include <gysin/cli.hpp>
#include <gysin/errors.hpp>

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace gysin;
using gysin::test::P;

namespace {

struct Outcome {
    int status = -1;
    std::string out;
};

Outcome shell(const std::string &args, const std::string &prefix = "")
{
    const std::string cmd = prefix + " '" + std::string(GYSIN_CLI_PATH) + "' " + args + " 2>/dev/null";
    Outcome o;
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        o.out.append(buf, got);
    const int raw = pclose(pipe);
    o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return o;
}

std::string golden(const std::string &name)
{
    std::ifstream in(std::string(GYSIN_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Request request(const char *space, const char *cls, bool oracle = false)
{
    Request r;
    r.space = parse_space(space);
    r.class_expr = cls;
    r.check_oracle = oracle;
    return r;
}

} // namespace

TEST_CASE("run reports results and oracle agreement")
{
    const auto lg = run(request("lg:1", "s[3](z)", true));
    CHECK(lg.result == P("t[1]^2"));
    CHECK(lg.agree() == true);
    CHECK(lg.exit_code() == 0);

    const auto gr = run(request("gr:1,2", "1"));
    CHECK(gr.result.is_zero());
    CHECK_FALSE(gr.agree().has_value());

    const auto fl = run(request("flA:1,2;3", "s[1](z)^3*z[1,1]", true));
    CHECK(fl.agree() == true);
    CHECK(fl.result == P("2*t[1]+2*t[2]+2*t[3]"));

    Request un = request("flA:1,2;3", "s[1](z)^3*z[1,1]", true);
    un.unsimplified = true;
    CHECK(run(un).result == fl.result);

    Report fake = lg;
    fake.oracle = P("t[1]");
    CHECK(fake.agree() == false);
    CHECK(fake.exit_code() == 2);
}

TEST_CASE("text and json rendering")
{
    const auto lg = run(request("lg:1", "s[3](z)", true));
    const std::string text = lg.render(OutputFormat::Text);
    CHECK(text.rfind("space: lg:1\nclass: s[3](z)\nresult: t[1]^2\ndegree: 2\nweyl_order: 1\noracle: t[1]^2\nagree: true\n"
                     "time_ms: ",
                     0) == 0);
    CHECK(lg.render(OutputFormat::Json) == golden("lg1_s3_oracle.json"));
    CHECK(run(request("gr:1,2", "1")).render(OutputFormat::Json) == golden("gr12_one.json"));
    CHECK(run(request("flA:1,2;3", "s[1](z)^3*z[1,1]")).render(OutputFormat::Json) == golden("flA_12_3.json"));
}

TEST_CASE("table of Lagrangian Schur push-forwards")
{
    const auto rows = lagrangian_schur_table(2, 5, 2);
    CHECK(rows.size() == 12);
    CHECK(render_table(rows, OutputFormat::Text) == golden("pr_2_5.txt"));
    CHECK(render_table(lagrangian_schur_table(2, 5, 1), OutputFormat::Json) ==
          render_table(rows, OutputFormat::Json));
    CHECK(parse_table_spec("pr:3,7") == std::pair{3, 7});
    CHECK_THROWS_AS(parse_table_spec("pr:0,7"), InvalidSpace);
    CHECK_THROWS_AS(parse_table_spec("xx:1,2"), InvalidSpace);
}

TEST_CASE("command line contract")
{
    const auto ok = shell("pushforward --space lg:1 --class 's[3](z)' --oracle --format json");
    CHECK(ok.status == 0);
    CHECK(ok.out == golden("lg1_s3_oracle.json"));

    const auto text = shell("pushforward --space gr:1,2 --class 1");
    CHECK(text.status == 0);
    CHECK(text.out.find("result: 0\n") != std::string::npos);

    const auto piped = shell("pushforward --space lg:1 --class - --oracle --format json", "printf 's[3](z)\\n' |");
    CHECK(piped.status == 0);
    CHECK(piped.out == golden("lg1_s3_oracle.json"));

    CHECK(shell("pushforward --space gr:1,2 --class 'z[9]'").status == 1);
    CHECK(shell("pushforward --space gr:2,4 --class 'z[1]'").status == 1);
    CHECK(shell("pushforward --space gr:5,4 --class 1").status == 1);
    CHECK(shell("pushforward --space gr:1,2 --class 'z[1]+'").status == 1);
    CHECK(shell("pushforward --space lg:2 --class 1 --unsimplified").status == 1);

    const auto table = shell("pushforward --table pr:2,5", "GYSIN_THREADS=3");
    CHECK(table.status == 0);
    CHECK(table.out == golden("pr_2_5.txt"));
}

TEST_CASE("thread budget from the environment")
{
    setenv("GYSIN_THREADS", "3", 1);
    CHECK(thread_budget() == 3);
    setenv("GYSIN_THREADS", "zero", 1);
    CHECK(thread_budget() >= 1);
    unsetenv("GYSIN_THREADS");
    CHECK(thread_budget() >= 1);
}
