def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def countdown(n):
    steps = []
    while n > 0:
        steps.append(n)
        n -= 1
    return steps
