// Runs one refuting scenario and one witnessed joint embedding, prints both
// certificates as JSON, and re-verifies them from their serialized form —
// the full round trip a report consumer would perform.

#include <iostream>

#include "aeclab/axiom_lab.hpp"
#include "aeclab/scenarios.hpp"

int main() {
    using namespace aeclab;

    Certificate refuted = run_scenario(build_scenario("notboth"));
    std::cout << "amalgamation failure (one-sided types):\n"
              << certificate_to_json(refuted).dump(2) << "\n\n";

    Certificate joined = jep_check(ClassSpec(ForbClass{{gen_edgeless(3)}}),
                                   NoAddRel{gen_edgeless(3), 1}, gen_complete(2),
                                   gen_complete(2), JepStrategy::Join);
    std::cout << "joint embedding by all-cross-edges join:\n"
              << certificate_to_json(joined).dump(2) << "\n\n";

    for (const Certificate& cert : {refuted, joined}) {
        Certificate reloaded = certificate_from_json(certificate_to_json(cert));
        std::cout << reloaded.command << " re-verifies: "
                  << (verify_certificate(reloaded) ? "yes" : "no") << "\n";
        if (!verify_certificate(reloaded)) return 1;
    }
    return 0;
}
