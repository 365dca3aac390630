def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'
def make_report(rows):
    lines = []
    for name, value in rows:
        if value is not None and value > 0:
            lines.append(name + '=' + str(value))
    return lines
