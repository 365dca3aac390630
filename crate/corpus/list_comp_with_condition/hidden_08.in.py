def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def teens(ages):
    t = []
    for a in ages:
        if 13 <= a <= 19:
            t.append(a)
    return t
# probe: teens([12, 13, 17, 20])
