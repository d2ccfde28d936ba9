#include "rigiditykit/negativity.hpp"

namespace rigiditykit {

namespace {

InequalityCertificate certify_with_weights(const Spectrum<Rational>& s, int r,
                                           const std::vector<Rational>& w,
                                           double strictness_margin) {
    detail::require_certifiable(s, r);
    const auto& lam = s.values();
    const int r0 = r - 1;

    InequalityCertificate cert;
    cert.r = r;
    cert.lambdas = lam;
    cert.L_direct = detail::L_direct_impl(lam, r0, w);
    cert.bcd = detail::transform_bcd_impl(lam, r0, w, 0.0);
    cert.identity_flags.c_matches_d_product = true;  // transform_bcd_impl throws otherwise

    cert.sum_d_sq = Rational(0);
    for (const Rational& d : cert.bcd.d) cert.sum_d_sq += d * d;
    cert.L_factored = detail::L_factored_impl(cert.bcd);

    auto interp = detail::interpolation_impl(cert.bcd, 0.0);
    cert.identity_flags.interpolation_values = interp.flags.interpolation_values;
    cert.identity_flags.interpolation_poly = interp.flags.interpolation_poly;
    cert.identity_flags.trace_matches = interp.flags.trace_matches;

    cert.identity_flags.factorization_matches = cert.L_direct == cert.L_factored;
    if (!cert.identity_flags.factorization_matches)
        throw IdentityViolation("direct and factored evaluations disagree at r = " + std::to_string(r));

    cert.identity_flags.sum_d_sq_dominates = cert.sum_d_sq > cert.bcd.B * cert.bcd.B;
    cert.identity_flags.negative = cert.L_direct < 0;
    if (!cert.identity_flags.negative || !cert.identity_flags.sum_d_sq_dominates) {
        std::string lams;
        for (const Rational& l : lam) lams += (lams.empty() ? "" : ",") + to_string(l);
        throw VerificationFailure("L(" + std::to_string(r) + ") = " + to_string(cert.L_direct) +
                                  " is not negative for spectrum (" + lams + ")");
    }

    cert.bound_chain = detail::bound_chain_impl(cert.bcd, strictness_margin);
    return cert;
}

}  // namespace

InequalityCertificate certify(const Spectrum<Rational>& s, int r, double strictness_margin) {
    detail::require_certifiable(s, r);
    return certify_with_weights(s, r, detail::node_weights(s.values()), strictness_margin);
}

std::vector<InequalityCertificate> certify_all(const Spectrum<Rational>& s, double strictness_margin) {
    s.require_distinct();
    if (s.n() < 3) throw DegenerateSpectrum("need n >= 3 (the defining sum is empty below that)");
    auto w = detail::node_weights(s.values());
    std::vector<InequalityCertificate> certs;
    certs.reserve(s.n());
    for (int r = 1; r <= s.n(); ++r) certs.push_back(certify_with_weights(s, r, w, strictness_margin));
    return certs;
}

}  // namespace rigiditykit
