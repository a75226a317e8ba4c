#include "cliquefam/acceptance.hpp"

#include <cstdlib>
#include <string>
#include <thread>

int main(int argc, char** argv) {
    std::string filter = argc > 1 ? argv[1] : "";
    int threads = int(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (const char* env = std::getenv("CLIQUEFAM_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) threads = t;
    }
    auto rows = cliquefam::accept::run_acceptance(filter, threads);
    return cliquefam::accept::print_rows(rows) ? 0 : 1;
}
