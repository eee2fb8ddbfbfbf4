#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace qfoulkes {

enum class Emit { text, json };

struct RunConfig {
    int degree_cap = 30;
    int jobs = 1;
    std::filesystem::path cache_path;
    bool use_cache = true;
    Emit emit = Emit::text;
    std::uint64_t seed = 1;
    bool verdict_only = false;
    bool timing = true;
};

/// Exit codes of run().
inline constexpr int exit_verified = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_error = 2;

/// Command-line entry point; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfoulkes
