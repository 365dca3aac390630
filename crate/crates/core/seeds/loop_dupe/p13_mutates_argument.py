def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def extend_all(rows, value):
    for row in rows:
        row.append(value)
    return rows
# probe: extend_all([[1], [2]], 0)
