def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def teens(ages):
    t = [a for a in ages if 13 <= a <= 19]
    return t
