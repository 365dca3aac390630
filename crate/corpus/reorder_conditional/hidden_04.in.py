def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def summary(items):
    if not len(items) > 3:
        text = ', '.join(items)
    else:
        text = items[0] + ' and ' + str(len(items) - 1) + ' more'
    return text
# probe: summary(['a', 'b'])
# probe: summary(['a', 'b', 'c', 'd', 'e'])
