def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def filter_if(values, enabled):
    if enabled:
        result = []
        for v in values:
            if v != 0:
                result.append(v)
        return result
    return values
# probe: filter_if([0, 1, 0, 2], True)
# probe: filter_if([0, 1], False)
