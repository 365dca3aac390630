def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def summary(items):
    if len(items) > 3:
        text = items[0] + ' and ' + str(len(items) - 1) + ' more'
    else:
        text = ', '.join(items)
    return text
