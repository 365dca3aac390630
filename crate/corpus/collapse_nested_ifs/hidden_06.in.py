def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def make_report(rows):
    lines = []
    for name, value in rows:
        if value is not None:
            if value > 0:
                lines.append(name + '=' + str(value))
    return lines
# probe: make_report([('a', 1), ('b', None), ('c', -3), ('d', 7)])
