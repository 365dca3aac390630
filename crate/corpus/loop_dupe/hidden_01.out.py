def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def fill(values, use_default):
    if use_default:
        return [0]
    else:
        for k in range(3):
            values.append(k)
        for k in range(3):
            values.append(k)
    return values
