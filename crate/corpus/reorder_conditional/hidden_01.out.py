def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def describe_value(v):
    if v is None:
        return 'nothing'
    else:
        return 'value ' + str(v)
