//! Printed reference values from the published appendix: the six tables,
//! their stated determinants, the two coordinate vectors used in the
//! congruence-constant derivations, and the printed constants. Everything
//! here is comparison data; the computed side never reads from it.

/// Table 1: rows `L(-2)^2E, L(-4)E, L(-1)b_1, L(-1)b_2, L(-1)b_3`,
/// columns `a_1..a_5`.
pub const TABLE_1: [[&str; 5]; 5] = [
    ["1/(16*k^2)", "1/(2*k)", "1/(2*k)", "2", "1"],
    ["0", "0", "1/(2*k)", "1", "1/(4*k)"],
    ["1", "3", "0", "0", "0"],
    ["0", "1", "2", "0", "1"],
    ["0", "0", "1", "3", "0"],
];

pub const TABLE_1_ROWS: [&str; 5] = [
    "L(-2)^2 E",
    "L(-4) E",
    "L(-1) a(-1)^3 F",
    "L(-1) a(-2)a(-1) E",
    "L(-1) a(-3) F",
];

pub const TABLE_1_COLS: [&str; 5] = ["a_1", "a_2", "a_3", "a_4", "a_5"];

pub const DET_A: &str = "-(16*k^2 - 40*k + 9)/(16*k^2)";

/// Table 2: rows `a_1..a_5`, columns `A_1..A_5`.
pub const TABLE_2: [[&str; 5]; 5] = [
    [
        "48*k^2/((4*k-1)*(4*k-9))",
        "-24*(16*k-3)*k/((4*k-1)*(4*k-9))",
        "2*(8*k^2-20*k+3)/((4*k-1)*(4*k-9))",
        "-6*(8*k^2-16*k+3)/((4*k-1)*(4*k-9))",
        "24*k/(4*k-9)",
    ],
    [
        "-16*k^2/((4*k-1)*(4*k-9))",
        "8*(16*k-3)*k/((4*k-1)*(4*k-9))",
        "1/((4*k-1)*(4*k-9))",
        "2*(8*k^2-16*k+3)/((4*k-1)*(4*k-9))",
        "-8*k/(4*k-9)",
    ],
    [
        "12*k/((4*k-1)*(4*k-9))",
        "-3*(16*k^2-8*k+3)/((4*k-1)*(4*k-9))",
        "-3/(4*k*(4*k-1)*(4*k-9))",
        "-(72*k-27)/(12*k*(4*k-1)*(4*k-9))",
        "(4*k-3)/(4*k-9)",
    ],
    [
        "-4*k/((4*k-1)*(4*k-9))",
        "(16*k^2-8*k+3)/((4*k-1)*(4*k-9))",
        "1/(4*k*(4*k-1)*(4*k-9))",
        "(8*k-3)/(4*k*(4*k-1)*(4*k-9))",
        "-2/(4*k-9)",
    ],
    [
        "8*(2*k-3)*k/((4*k-1)*(4*k-9))",
        "-2*(16*k^2+12*k-9)/((4*k-1)*(4*k-9))",
        "-(2*k-3)/(2*k*(4*k-1)*(4*k-9))",
        "-(2*k-3)*(8*k-3)/(2*k*(4*k-1)*(4*k-9))",
        "6/(4*k-9)",
    ],
];

/// Table 3: rows `C_1..C_12`, columns `c_1..c_12`.
pub const TABLE_3: [[&str; 12]; 12] = [
    ["0", "2", "0", "0", "0", "0", "0", "0", "0", "0", "5", "0"],
    ["0", "0", "4", "0", "0", "0", "3", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "6", "1", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "5", "2", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "4", "0", "3", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "3", "0", "2", "2", "0", "0"],
    ["0", "0", "0", "0", "0", "6", "0", "0", "0", "0", "0", "1"],
    ["0", "0", "2", "0", "0", "0", "3", "0", "0", "0", "1/(2*k)", "0"],
    ["0", "0", "0", "4", "0", "0", "1/(2*k)", "1", "0", "0", "0", "0"],
    [
        "1/(64*k^4)",
        "9/(16*k^3)",
        "3/(2*k^2)",
        "-15/k",
        "12/k",
        "-9/k",
        "3/(2*k^2)",
        "6/k",
        "2/k^2",
        "3/(8*k^2)",
        "3/(64*k^3)",
        "0",
    ],
    [
        "1/(256*k^4)",
        "6/k^3",
        "3/(2*k^2)",
        "15/(2*k)",
        "0",
        "9/(2*k)",
        "0",
        "0",
        "5/(4*k^2)",
        "0",
        "0",
        "0",
    ],
    ["0", "0", "0", "0", "3", "2", "0", "0", "0", "1/(2*k)", "0", "0"],
];

pub const TABLE_3_ROWS: [&str; 12] = [
    "C_1", "C_2", "C_3", "C_4", "C_5", "C_6", "C_7", "C_8", "C_9", "C_10", "C_11", "C_12",
];

pub const TABLE_3_COLS: [&str; 12] = [
    "c_1", "c_2", "c_3", "c_4", "c_5", "c_6", "c_7", "c_8", "c_9", "c_10", "c_11", "c_12",
];

pub const DET_B: &str = "-36315/(128*k^8)";

/// Tables 4 and 5 side by side: rows `c_1..c_12`, columns `C_1..C_12`.
pub const TABLE_45: [[&str; 12]; 12] = [
    [
        "-13392*k/269",
        "-73464*k^2/269",
        "1164704*k^3/1345",
        "-613408*k^3/1345",
        "323568*k^3/1345",
        "-91552*k^2/1345",
        "0",
        "661872*k^2/1345",
        "-1465296*k^3/1345",
        "82432*k^4/1345",
        "14592*k^4/1345",
        "304384*k^3/1345",
    ],
    [
        "19/538",
        "35*k/269",
        "-1204*k^2/807",
        "188*k^2/807",
        "-418*k^2/807",
        "-16*k/269",
        "0",
        "-94*k/269",
        "482*k^2/269",
        "-32*k^3/807",
        "128*k^3/807",
        "72*k^2/269",
    ],
    [
        "25/(538*k)",
        "131/269",
        "602*k/4035",
        "-94*k/4035",
        "209*k/4035",
        "8/1345",
        "0",
        "-1251/2690",
        "-241*k/1345",
        "16*k^2/4035",
        "-64*k^2/4035",
        "-36*k/1345",
    ],
    [
        "-25/(12912*k^2)",
        "-85/(8608*k)",
        "19573/96840",
        "-3941/96840",
        "3617/193680",
        "-1/(4035*k)",
        "0",
        "417/(21520*k)",
        "-3553/64560",
        "-2*k/12105",
        "8*k/12105",
        "3/2690",
    ],
    [
        "25/(2152*k^2)",
        "255/(4304*k)",
        "-3433/16140",
        "3941/16140",
        "-3617/32280",
        "2/(1345*k)",
        "0",
        "-1251/(10760*k)",
        "3553/10760",
        "4*k/4035",
        "-16*k/4035",
        "-9/1345",
    ],
    [
        "-125/(4304*k^2)",
        "-1275/(8608*k)",
        "3433/6456",
        "-713/6456",
        "3617/12912",
        "-1/(269*k)",
        "0",
        "1251/(4304*k)",
        "-3553/4304",
        "-2*k/807",
        "8*k/807",
        "9/538",
    ],
    [
        "-50/(807*k)",
        "-85/269",
        "-2408*k/12105",
        "376*k/12105",
        "-836*k/12105",
        "-32/4035",
        "0",
        "834/1345",
        "964*k/4035",
        "-64*k^2/12105",
        "256*k^2/12105",
        "48*k/1345",
    ],
    [
        "125/(3228*k^2)",
        "425/(2152*k)",
        "-3433/4842",
        "713/4842",
        "-389/9684",
        "4/(807*k)",
        "0",
        "-417/(1076*k)",
        "3553/3228",
        "8*k/2421",
        "-32*k/2421",
        "-6/269",
    ],
    [
        "25/(538*k)",
        "255/1076",
        "4637*k/4035",
        "3941*k/4035",
        "4453*k/8070",
        "1361/2690",
        "0",
        "-1251/2690",
        "-4517*k/2690",
        "16*k^2/4035",
        "-64*k^2/4035",
        "-2726*k/1345",
    ],
    [
        "25/(538*k)",
        "255/1076",
        "-3433*k/4035",
        "-4129*k/4035",
        "-3617*k/8070",
        "8/1345",
        "0",
        "-1251/2690",
        "3553*k/2690",
        "16*k^2/4035",
        "-64*k^2/4035",
        "2654*k/1345",
    ],
    [
        "50/269",
        "-14*k/269",
        "2408*k^2/4035",
        "-376*k^2/4035",
        "836*k^2/4035",
        "32*k/1345",
        "0",
        "188*k/1345",
        "-964*k^2/1345",
        "64*k^3/4035",
        "-256*k^3/4035",
        "-144*k^2/1345",
    ],
    [
        "375/(2152*k^2)",
        "3825/(4304*k)",
        "-3433/1076",
        "713/1076",
        "-3617/2152",
        "6/(269*k)",
        "1",
        "-3753/(2152*k)",
        "10659/2152",
        "4*k/269",
        "-16*k/269",
        "-27/269",
    ],
];

/// Table 6: rows `G_1..G_11`, columns `g_1..g_11`.
pub const TABLE_6: [[&str; 11]; 11] = [
    ["5", "2", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "4", "1", "2", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "3", "0", "2", "2", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "3", "0", "2", "2", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "4", "0", "1", "2", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "2", "0", "3", "2", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "5", "2"],
    ["3", "0", "0", "0", "2", "1/(2*k)", "0", "0", "0", "0", "0"],
    ["0", "2", "1", "0", "0", "1", "0", "0", "1/(2*k)", "0", "0"],
    ["0", "0", "0", "3", "0", "0", "2", "0", "0", "1/(2*k)", "0"],
    [
        "256*k^3",
        "192*k^2",
        "192*k^2",
        "48*k",
        "96*k^2",
        "96*k",
        "4",
        "16*k",
        "6",
        "0",
        "0",
    ],
];

pub const TABLE_6_ROWS: [&str; 11] = [
    "G_1", "G_2", "G_3", "G_4", "G_5", "G_6", "G_7", "G_8", "G_9", "G_10", "G_11",
];

pub const TABLE_6_COLS: [&str; 11] = [
    "g_1", "g_2", "g_3", "g_4", "g_5", "g_6", "g_7", "g_8", "g_9", "g_10", "g_11",
];

pub const DET_C: &str = "-(24/k^2)*(1536*k^4 - 2592*k^3 + 1072*k^2 - 58*k + 15)";

/// The quartic factor of the printed determinant of Table 6.
pub const DET_C_QUARTIC: &str = "1536*k^4 - 2592*k^3 + 1072*k^2 - 58*k + 15";

/// Printed coordinates of `J_{-1}E` over `a_1..a_5`.
pub const J_E_COORDS: [&str; 5] = ["1/(4*k^2)", "6/k", "12 - 1/k", "8*k - 17", "6 + 3/(4*k)"];

/// Printed coordinates of `J_{-1}J` over `c_1..c_12`.
pub const J_J_COORDS: [&str; 12] = [
    "1/(16*k^4)",
    "11/(2*k^3)",
    "12/k^2",
    "558/k",
    "-87/k",
    "186/k",
    "90/k^2",
    "72/k",
    "43/k^2",
    "117/(2*k^2)",
    "51/(8*k^3)",
    "105/(16*k^2)",
];

pub const BETA: &str = "(64*k^2 - 16*k - 18)/((4*k - 1)*(4*k - 9))";

/// The two printed decimal candidates for `(rho, sigma)`: the statement
/// version and the proof version, as `(c0, c1)` pairs of `c0 + c1/k`.
pub const RHO_SIGMA_STATEMENT: ((f64, f64), (f64, f64)) = ((3.28, 0.098), (2.87, -0.39));
pub const RHO_SIGMA_PROOF: ((f64, f64), (f64, f64)) = ((3.06, 0.098), (3.73, -0.39));
