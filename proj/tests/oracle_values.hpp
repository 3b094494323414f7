#pragma once

// Generated by tools/oracles/derive.py (sympy). Do not edit.

namespace oracle {

// sin(x)^2 * exp(x) / (1 + x^2) at x = 0.7, derivatives 0..3
inline constexpr double kJetA[4] = {5.60899635326877477e-01, 1.36572686511391317e+00, 3.64666896468269830e-01, -5.92016308447999151e+00};
// sqrt(1 + x^3) * log(2 + cos(x)) + tan(x/3)^2.5 at x = 1.3
inline constexpr double kJetB[4] = {1.60940711683339233e+00, 7.19278521259097525e-01, -3.57482111504078048e-01, -2.40024065071250936e+00};
// sinh(x) * cosh(2x) - x^-2 at x = -1.2
inline constexpr double kJetC[4] = {-9.08244144704603151e+00, 2.54064334335243664e+01, -8.44233369635814910e+01, 2.36672128109288394e+02};
// exp(u1 u2) sin(u1 - u2^2) at (0.4, -0.9): value, d1, d2, d11, d12, d22
inline constexpr double kJet2[6] = {-2.78100291485814777e-01, 8.90143748563163362e-01, 1.04049615861234823e+00, -1.09889721982436939e+00, -4.58024915072089533e-01, 4.98230945489788690e-01};

// alpha = (s, s^2/2, s^3/6): kappa = sqrt(s**2 + 1), tau = 1/(s**2 + 1)
// alpha = (s, sin(s) + s^2, exp(s/2) - s^3) at s = -0.5, 0.3, 1.2: {s, kappa, tau}
inline constexpr double kCurve[3][3] = {
    {-5.00000000000000000e-01, 4.04396591755196244e+00, -7.23481317503792853e-01},
    {2.99999999999999989e-01, 2.27683260757523565e+00, -2.20322756984992241e+00},
    {1.19999999999999996e+00, 6.82850057773790642e+00, -1.84617720563637316e-01},
};

// X = (u1 + 0.3 u2, u1 u2 + sin(u2), u1^2 - u2^2/2), u2 = s^2/2 + s/4, u1 = s - 0.3 u2
// at s = -0.6, 0.2, 0.9: {s, kg, kn, tau_g}
inline constexpr double kDarboux[3][4] = {
    {-5.99999999999999978e-01, 1.45572043939687301e+00, 2.25525080259085486e+00, -2.04895175794615003e+00},
    {2.00000000000000011e-01, 1.72822787279852164e+00, 1.39494824911353077e+00, -7.28587309497514490e-01},
    {9.00000000000000022e-01, 2.55705682686205682e+00, 8.87728791433235742e-02, -8.45834209950355298e-01},
};

// cylinder (u1, sin u2, cos u2), trace (s, s): kg = 0, kn = -1, tau_g = -1
inline constexpr double kHelix[3] = {0.00000000000000000e+00, -1.00000000000000000e+00, -1.00000000000000000e+00};

// isotropic revolution of g = s^3/3 + s with c = 2, unit normal (y, z) at (s, t) = (0.8, -1.1)
inline constexpr double kIsoNormal[2] = {9.71520338783129600e-01, 2.36956180191007226e-01};

}  // namespace oracle
