def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def rounds(n):
    count = 0
    while n > 0:
        count += 0 + 1
        count += 1 + 1
        n -= 1
    return count
