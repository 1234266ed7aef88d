// Generated by generate_oracles.py; do not edit by hand.
#ifndef UMBRAL_TESTS_FROZEN_VALUES_HPP
#define UMBRAL_TESTS_FROZEN_VALUES_HPP

#include <array>
#include <complex>
#include <vector>

namespace frozen {

// Δ_1..Δ_6 for g_n = 1/(n+1).
inline const std::vector<const char*> hilbert_hankel{"1", "1/12", "1/2160", "1/6048000", "1/266716800000", "1/186313420339200000"};
// Monic Legendre polynomials on [0, 1], P_0..P_6, coefficients from x^0.
inline const std::vector<std::vector<const char*>> legendre01_polys{
    {"1"},
    {"-1/2", "1"},
    {"1/6", "-1", "1"},
    {"-1/20", "3/5", "-3/2", "1"},
    {"1/70", "-2/7", "9/7", "-2", "1"},
    {"-1/252", "5/42", "-5/6", "20/9", "-5/2", "1"},
    {"1/924", "-1/22", "5/11", "-20/11", "75/22", "-3", "1"},
};
inline const std::vector<const char*> legendre01_u{"1/12", "1/15", "9/140", "4/63", "25/396"};
inline const std::vector<const char*> legendre01_h{"1", "1/12", "1/180", "1/2800", "1/44100", "1/698544", "1/11099088"};
// Moments of x(1-x) dx on [0, 1], normalized.
inline const std::vector<const char*> legendre01_tau{"1", "1/2", "3/10", "1/5", "1/7", "3/28", "1/12", "1/15", "3/55", "1/22", "1/26", "3/91"};
// g_n = (2/3)(n+3)/(n+2).
inline const std::vector<const char*> krall23_g{"1", "8/9", "5/6", "4/5", "7/9", "16/21", "3/4", "20/27"};
inline const std::vector<const char*> krall23_b{"8/9", "152/315", "216/455", "1184/2457", "31400/64449", "93528/190619"};
inline const std::vector<const char*> krall23_u{"7/162", "117/2450", "9/169", "2015/35721", "13545/232562"};
inline const std::vector<std::vector<const char*>> krall23_polys{
    {"1"},
    {"-8/9", "1"},
    {"27/70", "-48/35", "1"},
    {"-64/455", "90/91", "-24/13", "1"},
    {"125/2646", "-80/147", "115/63", "-440/189", "1"},
};
// Monic system of g_n = (4/7)(n+7)/(n+4).
inline const std::vector<std::vector<const char*>> krall47_polys{
    {"1"},
    {"-32/35", "1"},
    {"50/91", "-20/13", "1"},
    {"-40/147", "115/84", "-44/21", "1"},
    {"245/2046", "-952/1023", "378/155", "-896/341", "1"},
    {"-896/18447", "3290/6149", "-12880/6149", "2100/559", "-1760/559", "1"},
};
// Measure moments for α = 5/2, β = 1/3 by direct integration.
inline const std::vector<const char*> krall_measure_52_13{"1", "20/7", "35/9", "50/11", "5", "16/3"};
// q = 1/2: (1 + 0 q^n) g_{n+1} + (-1 + q^n/2) g_n = 0.
inline const std::vector<const char*> q_half_g{"1", "1/2", "3/8", "21/64", "315/1024", "9765/32768", "615195/2097152", "78129765/268435456", "19923090075/68719476736"};
inline const std::vector<const char*> q_half_P2{"3/16", "-9/8", "1"};
// Hermite type (0, 0, 1; -2, 0): -2 g_{n+1} + n g_{n-1} = 0.
inline const std::vector<const char*> hermite_g{"1", "0", "1/2", "0", "3/4", "0", "15/8", "0", "105/16"};
// |x|^(1/2) e^(-x^2) moments, normalized.
inline const std::vector<const char*> dunkl_quarter_u{"3/4", "1", "7/4"};
// Σ_k (-n)_k (2)_k (3)_k / (k! (4)_k (5)_k) x^k, n = 0..4.
inline const std::vector<std::vector<const char*>> hyp32_2345{
    {"1"},
    {"1", "-3/10"},
    {"1", "-3/5", "3/25"},
    {"1", "-9/10", "9/25", "-2/35"},
    {"1", "-6/5", "18/25", "-8/35", "3/98"},
};
inline const char* det4 = "9378/35";
// σ(z; 4, 1) from θ_1 with periods 2ω_1, 2ω_3; {re z, im z, re σ, im σ}.
inline constexpr double omega1 = 1.225694690993395;
inline constexpr double omega3_imag = 1.4967293231159798;
inline const std::vector<std::array<double, 4>> sigma_4_1{
    {0.10000000000000001, 0.0, 0.099999833214186495, 0.0},
    {0.5, 0.0, 0.49946967143497306, 0.0},
    {1.2, 0.0, 1.1537376522249878, 0.0},
    {2.0, 0.0, 1.2603626282701644, 0.0},
    {3.7999999999999998, 0.0, -38.464845808214305, 0.0},
    {5.1500000000000004, 0.0, 318.8572267967488, 0.0},
    {0.69999999999999996, 0.90000000000000002, 0.70237247085487502, 0.93113135942317323},
    {-1.5, 2.5, -0.16192449666618973, 4.0054344010623823},
    {0.0, 3.1000000000000001, 1.732360704235259e-74, -0.48291266425922733},
    {4.0, -3.0, -182.76539175935347, -130.06180494592224},
};
// σ(z; 1+i, 0.5-0.2i) from the Laurent coefficients of ℘ at 60 digits.
inline const std::vector<std::array<double, 4>> sigma_complex{
    {0.29999999999999999, 0.10000000000000001, 0.30001372685810015, 0.099987140095425035},
    {-0.80000000000000004, 0.59999999999999998, -0.80436609719085547, 0.59680369327758951},
    {1.0, -0.40000000000000002, 0.99733731636025542, -0.39219630120118167},
};
// Elliptic instance (g2, g3, w, α, β) = (4, 1, 0.1, 0.3, 0.7).
inline const std::vector<double> elliptic_mu{-6.7241625265000836e-64, 0.76923315236737923, 0.86958267391832011, 0.90914849380313748, 0.93036829594315144, 0.94366208318413026, 0.95284428613856323, 0.95964976243753958};
inline const std::vector<double> elliptic_g{1.0, 0.56043463064987804, 0.50308454237313689, 0.48046379744472186, 0.46832205398672366, 0.46070468878798393, 0.45543156193923729, 0.4515106954301164};
inline const std::vector<double> elliptic_b{0.56043463064987804, 0.4899376082984257, 0.4265122116438486, 0.42334863069241656, -0.25091262279811197, 2.0661542430232355, -0.15558930432474924};
inline const std::vector<double> elliptic_u{0.18899756714147167, 0.035505290439945445, 0.045443960400457674, 0.026965176039967635, -1.0212996532239719, -0.051829935010852294};
inline const std::vector<double> elliptic_P3{-0.016602706444945227, 0.49807173164993775, -1.4768844505921523, 1.0};

} // namespace frozen

#endif // UMBRAL_TESTS_FROZEN_VALUES_HPP
