def pick_larger(a, b):
    if a >= b:
        return a
    return b
def count_even_positive(values):
    count = 0
    for v in values:
        if v > 0 and v % 2 == 0:
            count += 1
    return count
