// Wire types for the /api routes. Ratios travel as exact strings ("3",
// "1/7"); weights are raw floats, rounding happens at render time.
export {};
