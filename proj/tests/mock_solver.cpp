// Scripted child for the external-solver protocol tests.
//
//   mock_solver midpoint            X = (l+u)/2 every turn
//   mock_solver arity               X with one coordinate too few
//   mock_solver close3              three midpoints, then exit
//   mock_solver replay <file>       one point per line of <file>
//   mock_solver outside             first request just above the upper bound
//   mock_solver linger              midpoints, ignores STOP and sleeps

#include "momark/io.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

namespace {

std::vector<double> parse_tagged(const std::string& line)
{
    std::vector<double> out;
    const auto fields = momark::io::split(line, ' ');
    for (std::size_t i = 1; i < fields.size(); ++i)
        out.push_back(momark::io::parse_double(fields[i]));
    return out;
}

void send(const std::vector<double>& x)
{
    std::string line = "X";
    for (double v : x)
        line += " " + momark::io::format_double(v);
    std::cout << line << "\n" << std::flush;
}

// Returns false when the harness is done with us.
bool await_reply()
{
    std::string line;
    if (!std::getline(std::cin, line))
        return false;
    return line.rfind("F ", 0) == 0;
}

} // namespace

int main(int argc, char** argv)
{
    const std::string mode = argc > 1 ? argv[1] : "midpoint";
    std::string greeting, lower_line, upper_line;
    if (!std::getline(std::cin, greeting) || !std::getline(std::cin, lower_line) || !std::getline(std::cin, upper_line))
        return 3;
    if (greeting.rfind("MOBENCH 1 ", 0) != 0)
        return 4;
    const std::vector<double> lo = parse_tagged(lower_line);
    const std::vector<double> hi = parse_tagged(upper_line);
    std::vector<double> mid(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i)
        mid[i] = 0.5 * (lo[i] + hi[i]);

    if (mode == "replay") {
        std::ifstream in(argc > 2 ? argv[2] : "");
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            std::cout << line << "\n" << std::flush;
            if (!await_reply())
                return 0;
        }
        return 0;
    }
    if (mode == "arity") {
        std::vector<double> x(mid.begin(), mid.end() - 1);
        send(x);
        await_reply();
        return 0;
    }
    if (mode == "outside") {
        std::vector<double> x = mid;
        x[0] = hi[0] + 1.0;
        send(x);
        std::string line;
        std::getline(std::cin, line);
        return line.rfind("ERROR", 0) == 0 ? 0 : 5;
    }
    int sent = 0;
    while (true) {
        if (mode == "close3" && sent == 3)
            return 0;
        send(mid);
        ++sent;
        if (!await_reply())
            break;
    }
    if (mode == "linger")
        std::this_thread::sleep_for(std::chrono::seconds(30));
    return 0;
}
