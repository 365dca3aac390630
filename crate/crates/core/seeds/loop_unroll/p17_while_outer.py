def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def rounds(n):
    count = 0
    while n > 0:
        for k in range(2):
            count += k + 1
        n -= 1
    return count
# probe: rounds(3)
