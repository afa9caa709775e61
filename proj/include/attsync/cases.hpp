#pragma once

#include <string>
#include <string_view>

namespace attsync::cases {

// Five-spacecraft golden configurations. Case 1 is strongly connected, Case 2
// quasi-strongly connected with root set {2,3,4}; the broken variant removes
// the only in-edge of node 1 and serves as the negative control.

inline constexpr std::string_view kInitialBlock =
    "[initial]\n"
    "q 1 0.0000  -0.6894 -0.6140  0.3843\n"
    "q 2 0.0000  -0.0602  0.7248  0.6863\n"
    "q 3 0.0000   0.8975 -0.4409  0.0119\n"
    "q 4 0.4796  -0.0077 -0.5447 -0.6879\n"
    "q 5 0.5929   0.1024  0.7263  0.3325\n";

inline constexpr std::string_view kIntegratorBlock =
    "[integrator]\n"
    "dt 0.01\n"
    "t_final 60\n"
    "record_every 100\n"
    "renormalize true\n"
    "canonicalize_init true\n"
    "transform_mode auto\n";

inline const std::string case1 =
    std::string("[graph]\n"
                "n 5\n"
                "edge 5 1 1.0\n"
                "edge 1 2 0.5\n"
                "edge 2 3 0.8\n"
                "edge 3 4 0.6\n"
                "edge 4 5 0.3\n") +
    std::string(kInitialBlock) + std::string(kIntegratorBlock) +
    "[output]\noutput_path case1\nemit_svg false\n";

inline const std::string case2 =
    std::string("[graph]\n"
                "n 5\n"
                "edge 5 1 1.0\n"
                "edge 4 2 0.5\n"
                "edge 2 3 0.8\n"
                "edge 3 4 0.6\n"
                "edge 4 5 0.3\n") +
    std::string(kInitialBlock) + std::string(kIntegratorBlock) +
    "[output]\noutput_path case2\nemit_svg false\n";

inline const std::string case2_broken =
    std::string("[graph]\n"
                "n 5\n"
                "edge 4 2 0.5\n"
                "edge 2 3 0.8\n"
                "edge 3 4 0.6\n"
                "edge 4 5 0.3\n") +
    std::string(kInitialBlock) + std::string(kIntegratorBlock) +
    "[output]\noutput_path case2_broken\nemit_svg false\n";

}  // namespace attsync::cases
