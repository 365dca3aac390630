def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

def valid_date(y, m, d):
    if y > 0:
        if 1 <= m:
            if m <= 12:
                if 1 <= d and d <= 31:
                    return True
    return False
# probe: valid_date(2024, 5, 17)
# probe: valid_date(2024, 13, 1)
# probe: valid_date(0, 5, 5)
