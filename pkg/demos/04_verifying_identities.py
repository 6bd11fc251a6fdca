"""Check each resolution identity on a grid of cases, both sides computed exactly."""
from charclass.verify import default_grid, verify_thm12_point_blowup

########## A point in P^n, resolved by one blowup
for n in range(2, 6):
    r = verify_thm12_point_blowup(n)
    print(r.line())
    print("   intermediate steps:", r.steps)

########## The full grid
reports = default_grid()
for r in reports:
    print(r.line())
print(f"{sum(r.equal for r in reports)} of {len(reports)} identities hold exactly")
