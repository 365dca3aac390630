def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def nothing(values):
    for k in range(0):
        values.append(k)
    return values
# probe: nothing([1])
