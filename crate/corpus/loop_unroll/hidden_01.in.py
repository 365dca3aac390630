def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def swap_first_two_pairs(values):
    for k in range(2):
        values[2 * k], values[2 * k + 1] = values[2 * k + 1], values[2 * k]
    return values
# probe: swap_first_two_pairs([1, 2, 3, 4, 5])
