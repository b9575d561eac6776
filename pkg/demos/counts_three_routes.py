"""Print A(N; x) for x = 1, 2, 3 from the product formulas, the Hankel determinant and
the transfer scan, side by side."""
from squareice.closed_forms import closed_count
from squareice.hankel import enumeration_from_partition
from squareice.moments import point_for_weight
from squareice.oracle import DEFAULT_LIMIT, oracle_counts


def main(n_max: int = 9) -> None:
    for x in (1, 2, 3):
        point = point_for_weight(x)
        print(f"x = {x}")
        for N in range(1, n_max + 1):
            closed = closed_count(N, x)
            det = enumeration_from_partition(point, N)
            brute = oracle_counts(N, x).total if N <= DEFAULT_LIMIT else "-"
            mark = "ok" if closed == det and brute in ("-", closed) else "MISMATCH"
            print(f"  N={N:2d}  closed={closed}  det={det}  scan={brute}  {mark}")


if __name__ == "__main__":
    main()
