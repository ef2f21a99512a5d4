import { describe, expect, it } from "vitest";
import { fmt3, roundHalfEven } from "../src/format.js";

describe("roundHalfEven", () => {
  it("rounds ties to the even neighbour", () => {
    expect(roundHalfEven(0.0005, 3)).toBe(0.0);
    expect(roundHalfEven(0.0015, 3)).toBe(0.002);
    expect(roundHalfEven(0.0025, 3)).toBe(0.002);
    expect(roundHalfEven(0.0035, 3)).toBe(0.004);
    expect(roundHalfEven(2.5, 0)).toBe(2);
    expect(roundHalfEven(3.5, 0)).toBe(4);
  });

  it("rounds non-ties to the nearest value", () => {
    expect(roundHalfEven(0.12345, 3)).toBe(0.123);
    expect(roundHalfEven(0.1239, 3)).toBe(0.124);
    expect(roundHalfEven(1.0, 3)).toBe(1.0);
  });
});

describe("fmt3", () => {
  it("always shows three decimals", () => {
    expect(fmt3(0.65)).toBe("0.650");
    expect(fmt3(1)).toBe("1.000");
    expect(fmt3(0.7224999999)).toBe("0.722");
  });
});
