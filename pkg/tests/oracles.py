"""Independent brute-force oracles the fast implementations are checked against."""


def brute_force_extrema(values):
    """Per-point scan for strict local extrema with first-of-plateau ties.

    For every point, look outward for the nearest differing value on each
    side; a point is a peak/trough when both exist and are smaller/larger,
    and the point is not a later member of a plateau.  Deliberately O(n^2)
    and structurally unlike the production single-pass implementation.
    """
    peaks, troughs = [], []
    n = len(values)
    for i in range(n):
        year, value = values[i]
        if i > 0 and values[i - 1][1] == value:
            continue  # not the first year of its plateau
        left = next((values[j][1] for j in range(i - 1, -1, -1) if values[j][1] != value), None)
        right = next((values[j][1] for j in range(i + 1, n) if values[j][1] != value), None)
        if left is None or right is None:
            continue
        if left < value and right < value:
            peaks.append(year)
        elif left > value and right > value:
            troughs.append(year)
    return peaks, troughs
