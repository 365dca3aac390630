def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def bonus(score, attended):
    total = score
    if score > 50 and attended:
        total = total + 10
    return total
