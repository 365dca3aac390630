def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def swap_first_two_pairs(values):
    values[2 * 0], values[2 * 0 + 1] = values[2 * 0 + 1], values[2 * 0]
    values[2 * 1], values[2 * 1 + 1] = values[2 * 1 + 1], values[2 * 1]
    return values
