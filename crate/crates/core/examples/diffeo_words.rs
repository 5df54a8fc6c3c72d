//! Self-maps of S3 x S3 written as pairs of words in s and t.

use jacobi_mcg::words::{eval_composition, identity_suite, induced_h3_matrix, FreeWord};

fn main() {
    let w = FreeWord::parse("s t t^-1 s^-1 t s").unwrap();
    println!("reduced: {w}");

    for text in ["Y", "U", "A", "B", "B^-1 Y U Y", "(B^-1 Y U Y)^4"] {
        let d = eval_composition(text).unwrap();
        println!("{text:>16} = {d}  on H3: {:?}", induced_h3_matrix(&d).unwrap());
    }

    for id in identity_suite() {
        let (l, r) = id.sides();
        println!("{:<16} {}", id.name, if l == r { "holds" } else { "differs" });
        if l != r {
            println!("    {l}\n    {r}");
        }
    }
}
